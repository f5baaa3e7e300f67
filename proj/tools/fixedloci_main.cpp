// Command-line front end. Subcommands: snf, torus-kernel, extension,
// verify-theorem, gp-graphs, gerbe (gerbe kummer ...). FIXEDLOCI_CAP
// overrides the default enumeration cap; an explicit --cap flag wins
// over the environment.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fixedloci/cli.hpp"

namespace {

long long default_cap() {
  const char* env = std::getenv("FIXEDLOCI_CAP");
  if (!env)
    return fixedloci::kGraphEnumCap;
  try {
    long long v = std::stoll(env);
    if (v >= 1)
      return v;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring non-positive or malformed FIXEDLOCI_CAP\n";
  return fixedloci::kGraphEnumCap;
}

}  // namespace

int main(int argc, char** argv) {
  fixedloci::RunConfig cfg;
  cfg.cap = default_cap();

  CLI::App app{"exact invariants of torus fixed loci: kernels, extensions, graphs, gerbes"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format: json, csv, or md")
        ->default_val("json");
  };

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("--matrix", cfg.matrix, "rows 'a,b;c,d'")->required();
  add_format(snf);

  CLI::App* tk = app.add_subcommand("torus-kernel", "kernel of the torus isogeny induced by a matrix");
  tk->add_option("--matrix", cfg.matrix, "square matrix 'a,b;c,d'")->required();
  add_format(tk);

  CLI::App* ext = app.add_subcommand("extension", "analyze the finite model of a torus extension");
  ext->add_option("--spec", cfg.spec_path, "JSON spec file {group, r, iota, M}");
  ext->add_option("--group", cfg.group, "group name, e.g. C4 or C2xC4");
  ext->add_option("--r", cfg.r_chain, "kernel divisor chain, e.g. 2 4")->delimiter(',');
  ext->add_option("--iota", cfg.iota, "kernel generator images in the group")->delimiter(',');
  ext->add_option("--M", cfg.M, "finite model order per torus factor")->default_val(2);
  add_format(ext);

  CLI::App* vt = app.add_subcommand("verify-theorem", "run the structure checks over a case corpus");
  vt->add_option("--corpus", cfg.corpus_path, "corpus JSON file")->required();
  add_format(vt);

  CLI::App* gp = app.add_subcommand("gp-graphs", "enumerate fixed-locus graphs with invariants");
  gp->add_option("--g", cfg.g, "total genus")->required();
  gp->add_option("--n", cfg.n, "number of legs")->required();
  gp->add_option("--N", cfg.N, "largest fixed-point label")->required();
  gp->add_option("--d", cfg.d, "total degree")->required();
  gp->add_option("--weights", cfg.weights, "torus weights 'a,b,...', one per label");
  gp->add_option("--cap", cfg.cap, "enumeration resource cap");
  add_format(gp);

  CLI::App* gerbe = app.add_subcommand("gerbe", "gerbe class ledger");
  CLI::App* kummer = gerbe->add_subcommand("kummer", "boundary class of a line bundle");
  kummer->add_option("--pic", cfg.pic, "Picard group, e.g. 'Z' or 'Z x Z/2'")->required();
  kummer->add_option("--L", cfg.L, "line bundle coordinates 'a,b,...'")->required();
  kummer->add_option("--r", cfg.r, "root order")->required();
  kummer->add_option("--twist", cfg.twist_w, "append an equivariant weight coordinate");
  add_format(kummer);
  gerbe->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  if (snf->parsed())
    cfg.command = "snf";
  else if (tk->parsed())
    cfg.command = "torus-kernel";
  else if (ext->parsed())
    cfg.command = "extension";
  else if (vt->parsed())
    cfg.command = "verify-theorem";
  else if (gp->parsed())
    cfg.command = "gp-graphs";
  else if (gerbe->parsed()) {
    cfg.command = "gerbe";
    cfg.gerbe_action = "kummer";
    cfg.has_twist = kummer->count("--twist") > 0;
  }

  return fixedloci::run(cfg, std::cout, std::cerr);
}
