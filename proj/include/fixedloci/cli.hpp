// Command dispatch behind the command-line front end. run() is pure
// with respect to its config: identical configs emit identical bytes,
// so determinism can be tested in-process as well as across processes.
//
// Exit codes: 0 success, 1 input error, 2 resource bound exceeded,
// 3 verification found a failing case (falsification, not a usage bug).
#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixedloci/corpus.hpp"
#include "fixedloci/json_io.hpp"

namespace fixedloci {

struct RunConfig {
  std::string command;         // snf | torus-kernel | extension | verify-theorem | gp-graphs | gerbe
  std::string format = "json";  // json | csv | md
  long long cap = kGraphEnumCap;

  // snf, torus-kernel
  std::string matrix;

  // extension: either a spec file or inline flags
  std::string spec_path;
  std::string group;
  std::vector<long long> r_chain;
  std::vector<int> iota;
  int M = 2;

  // verify-theorem
  std::string corpus_path;

  // gp-graphs
  int g = 0;
  int n = 0;
  int N = 1;
  int d = 1;
  std::string weights;  // optional "a,b,..."

  // gerbe
  std::string gerbe_action;  // "kummer"
  std::string pic;
  std::string L;
  long long r = 1;
  bool has_twist = false;
  long long twist_w = 0;
};

namespace detail {

inline std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += ' ';
    else
      out += c;
  }
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline void emit_table(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    for (std::size_t i = 0; i < t.header.size(); ++i)
      out << (i ? "," : "") << csv_escape(t.header[i]);
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << csv_escape(row[i]);
      out << "\n";
    }
    return;
  }
  // markdown
  out << "|";
  for (const std::string& h : t.header)
    out << " " << md_escape(h) << " |";
  out << "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i)
    out << " --- |";
  out << "\n";
  for (const auto& row : t.rows) {
    out << "|";
    for (const std::string& cell : row)
      out << " " << md_escape(cell) << " |";
    out << "\n";
  }
}

inline std::string join_chain(const DivisorChain& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.moduli.size(); ++i)
    out += (i ? ", " : "") + c.moduli[i].str();
  return out + ")";
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline json parse_json_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  require_input(in.good(), what + ": cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail_input(what + ": malformed JSON in '" + path + "': " + e.what());
  }
}

inline std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::string cur;
  auto flush = [&]() {
    require_input(!cur.empty(), what + ": empty entry in '" + text + "'");
    try {
      std::size_t used = 0;
      long long v = std::stoll(cur, &used);
      require_input(used == cur.size(), what + ": not an integer: '" + cur + "'");
      out.push_back(v);
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      fail_input(what + ": not an integer: '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  return out;
}

}  // namespace detail

struct CaseOutcome {
  std::string name;
  std::string status;  // pass | fail | precondition-rejected
  std::string expect;
  bool ok = false;  // status matches expect
  TheoremReport report;
  std::string message;  // rejection reason when status is precondition-rejected
};

inline CaseOutcome run_case(const TheoremCase& tc) {
  CaseOutcome out;
  out.name = tc.name;
  out.expect = tc.expect;
  try {
    out.report = verify_main_theorem(tc);
    out.status = out.report.all_ok() ? "pass" : "fail";
  } catch (const input_error& e) {
    out.status = "precondition-rejected";
    out.message = e.what();
  }
  out.ok = out.status == out.expect;
  return out;
}

inline std::vector<CaseOutcome> run_corpus_cases(const std::vector<TheoremCase>& cases) {
  std::vector<CaseOutcome> out;
  for (const TheoremCase& tc : cases)
    out.push_back(run_case(tc));
  return out;
}

inline json corpus_summary_to_json(const std::vector<CaseOutcome>& outcomes) {
  json cases = json::array();
  int passed = 0, failed = 0, rejected = 0, mismatched = 0;
  json parts;
  for (const char* key : {"split_ok", "central_ok", "pushout_ok", "part1_ok", "part2_ok",
                          "part3_ok", "remark_ok", "sweep_ok"})
    parts[key] = 0;
  for (const CaseOutcome& oc : outcomes) {
    json c;
    c["name"] = oc.name;
    c["status"] = oc.status;
    c["expect"] = oc.expect;
    c["ok"] = oc.ok;
    if (oc.status == "precondition-rejected") {
      c["message"] = oc.message;
      ++rejected;
    } else {
      c["report"] = theorem_report_to_json(oc.report);
      const TheoremReport& r = oc.report;
      parts["split_ok"] = parts["split_ok"].get<int>() + (r.split_ok ? 1 : 0);
      parts["central_ok"] = parts["central_ok"].get<int>() + (r.central_ok ? 1 : 0);
      parts["pushout_ok"] = parts["pushout_ok"].get<int>() + (r.pushout_ok ? 1 : 0);
      parts["part1_ok"] = parts["part1_ok"].get<int>() + (r.part1_ok ? 1 : 0);
      parts["part2_ok"] = parts["part2_ok"].get<int>() + (r.part2_ok ? 1 : 0);
      parts["part3_ok"] = parts["part3_ok"].get<int>() + (r.part3_ok ? 1 : 0);
      parts["remark_ok"] = parts["remark_ok"].get<int>() + (r.remark_ok ? 1 : 0);
      parts["sweep_ok"] = parts["sweep_ok"].get<int>() + (r.sweep_ok ? 1 : 0);
      if (oc.status == "pass")
        ++passed;
      else
        ++failed;
    }
    if (!oc.ok)
      ++mismatched;
    cases.push_back(std::move(c));
  }
  json out;
  out["cases"] = std::move(cases);
  json summary;
  summary["total"] = outcomes.size();
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["rejected"] = rejected;
  summary["mismatched"] = mismatched;
  summary["parts"] = std::move(parts);
  out["summary"] = std::move(summary);
  return out;
}

namespace detail {

inline int emit_payload(const json& payload, const Table& table, const RunConfig& cfg,
                        std::ostream& out) {
  if (cfg.format == "json")
    out << payload.dump(2) << "\n";
  else
    emit_table(table, cfg.format, out);
  return 0;
}

inline int run_snf(const RunConfig& cfg, std::ostream& out) {
  require_input(!cfg.matrix.empty(), "snf: --matrix is required");
  IntMatrix a = parse_matrix(cfg.matrix);
  SmithDecomposition s = smith_normal_form(a);
  json payload = snf_report_to_json(a, s);
  Table t;
  t.header = {"rows", "cols", "factors", "U", "D", "V"};
  std::string factors;
  for (std::size_t i = 0; i < s.factors.moduli.size(); ++i)
    factors += (i ? " " : "") + s.factors.moduli[i].str();
  t.rows.push_back({std::to_string(a.rows), std::to_string(a.cols), factors, format_matrix(s.U),
                    format_matrix(s.D), format_matrix(s.V)});
  return emit_payload(payload, t, cfg, out);
}

inline int run_torus_kernel(const RunConfig& cfg, std::ostream& out) {
  require_input(!cfg.matrix.empty(), "torus-kernel: --matrix is required");
  IntMatrix a = parse_matrix(cfg.matrix);
  FinAbGroup k = torus_kernel(a);
  json payload = torus_kernel_report_to_json(a, k);
  Table t;
  t.header = {"matrix", "kernel"};
  t.rows.push_back({format_matrix(a), format_mu(k)});
  return emit_payload(payload, t, cfg, out);
}

inline int run_extension(const RunConfig& cfg, std::ostream& out) {
  ExtensionSpec spec;
  if (!cfg.spec_path.empty()) {
    spec = extension_spec_from_json(parse_json_file(cfg.spec_path, "extension spec"));
  } else {
    require_input(!cfg.group.empty(), "extension: --group or --spec is required");
    spec.G = group_from_name(cfg.group);
    require_input(!cfg.r_chain.empty(), "extension: --r is required");
    for (long long v : cfg.r_chain)
      spec.r.moduli.push_back(v);
    require_input(!cfg.iota.empty(), "extension: --iota is required");
    spec.iota.images = cfg.iota;
    spec.M = cfg.M;
  }
  validate_extension_spec(spec);
  ExtensionModel m = build_extension(spec);
  ExtensionReport rep = analyze_extension(m);
  json payload = extension_report_to_json(rep);
  Table t;
  t.header = {"Gbar", "r", "split_ok", "central_ok", "pushout_ok", "details"};
  json gbar = group_to_json(rep.Gbar);
  t.rows.push_back({gbar.is_string() ? gbar.get<std::string>() : "order " + std::to_string(rep.Gbar.n),
                    join_chain(rep.r), bool_str(rep.split_ok), bool_str(rep.central_ok),
                    bool_str(rep.pushout_ok), rep.details});
  return emit_payload(payload, t, cfg, out);
}

inline int run_verify_theorem(const RunConfig& cfg, std::ostream& out) {
  require_input(!cfg.corpus_path.empty(), "verify-theorem: --corpus is required");
  std::vector<TheoremCase> cases =
      corpus_from_json(parse_json_file(cfg.corpus_path, "corpus"));
  std::vector<CaseOutcome> outcomes = run_corpus_cases(cases);
  json payload = corpus_summary_to_json(outcomes);
  Table t;
  t.header = {"name", "status", "expect", "ok", "split", "central", "pushout", "part1", "part2",
              "part3", "remark", "sweep", "details"};
  for (const CaseOutcome& oc : outcomes) {
    if (oc.status == "precondition-rejected") {
      t.rows.push_back({oc.name, oc.status, oc.expect, bool_str(oc.ok), "-", "-", "-", "-", "-",
                        "-", "-", "-", oc.message});
    } else {
      const TheoremReport& r = oc.report;
      t.rows.push_back({oc.name, oc.status, oc.expect, bool_str(oc.ok), bool_str(r.split_ok),
                        bool_str(r.central_ok), bool_str(r.pushout_ok), bool_str(r.part1_ok),
                        bool_str(r.part2_ok), bool_str(r.part3_ok), bool_str(r.remark_ok),
                        bool_str(r.sweep_ok), r.details});
    }
  }
  const json& summary = payload["summary"];
  t.rows.push_back({"TOTAL",
                    std::to_string(summary["passed"].get<int>()) + " passed / " +
                        std::to_string(summary["failed"].get<int>()) + " failed / " +
                        std::to_string(summary["rejected"].get<int>()) + " rejected",
                    "", std::to_string(summary["mismatched"].get<int>()) + " mismatched", "", "",
                    "", "", "", "", "", "", ""});
  emit_payload(payload, t, cfg, out);
  for (const CaseOutcome& oc : outcomes)
    if (!oc.ok)
      return 3;
  return 0;
}

inline int run_gp_graphs(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg.cap >= 1, "gp-graphs: cap must be positive");
  std::optional<WeightVector> w;
  if (!cfg.weights.empty()) {
    WeightVector wv;
    wv.lambda = parse_int_list(cfg.weights, "weights");
    validate_weights(wv, cfg.N + 1);
    w = std::move(wv);
  }
  std::vector<DecoratedGraph> graphs = enumerate_graphs(cfg.g, cfg.n, cfg.N, cfg.d, cfg.cap);
  json payload = json::array();
  Table t;
  t.header = {"graph", "r", "aut_order", "deck_order", "A_order", "moduli_factors",
              "unstable_vertices"};
  for (const DecoratedGraph& gr : graphs) {
    FixedLocusReport rep = component_descriptor(gr, w);
    payload.push_back(fixed_locus_report_to_json(rep));
    std::string desc;
    for (std::size_t i = 0; i < gr.vertices.size(); ++i)
      desc += (i ? " " : "v: ") + std::to_string(gr.vertices[i].label) + "g" +
              std::to_string(gr.vertices[i].genus);
    desc += "; e:";
    for (const GraphEdge& e : gr.edges)
      desc += " " + std::to_string(e.a) + "-" + std::to_string(e.b) + "d" +
              std::to_string(e.degree);
    if (!gr.legs.empty()) {
      desc += "; legs:";
      for (int leg : gr.legs)
        desc += " " + std::to_string(leg);
    }
    std::string factors;
    for (std::size_t i = 0; i < rep.moduli_factors.size(); ++i)
      factors += (i ? " " : "") + std::string("(") + std::to_string(rep.moduli_factors[i].first) +
                 "," + std::to_string(rep.moduli_factors[i].second) + ")";
    std::string unstable;
    for (std::size_t i = 0; i < rep.unstable_vertices.size(); ++i)
      unstable += (i ? " " : "") + std::to_string(rep.unstable_vertices[i]);
    t.rows.push_back({desc, rep.r ? std::to_string(*rep.r) : "-", std::to_string(rep.aut_order),
                      rep.deck_order.str(), rep.A_order.str(), factors, unstable});
  }
  return emit_payload(payload, t, cfg, out);
}

inline int run_gerbe(const RunConfig& cfg, std::ostream& out) {
  require_input(cfg.gerbe_action == "kummer",
                "gerbe: unknown action '" + cfg.gerbe_action + "' (expected 'kummer')");
  require_input(!cfg.pic.empty(), "gerbe: --pic is required");
  PicModel base;
  base.pic = parse_finab(cfg.pic);
  require_input(!cfg.L.empty(), "gerbe: --L is required");
  std::vector<Int> coords;
  for (long long v : parse_int_list(cfg.L, "L"))
    coords.push_back(v);
  require_input(cfg.r >= 1, "gerbe: --r must be at least 1");
  GerbeClass c = kummer_class(base, coords, cfg.r);
  if (cfg.has_twist)
    c = equivariant_twist(c, cfg.twist_w);
  json payload = gerbe_class_to_json(c);
  Table t;
  t.header = {"display", "r", "trivial"};
  t.rows.push_back({format_gerbe_class(c), std::to_string(cfg.r), bool_str(is_trivial(c))});
  return emit_payload(payload, t, cfg, out);
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    require_input(cfg.format == "json" || cfg.format == "csv" || cfg.format == "md",
                  "format: must be json, csv, or md");
    require_input(cfg.cap >= 1, "cap: must be positive");
    if (cfg.command == "snf")
      return detail::run_snf(cfg, out);
    if (cfg.command == "torus-kernel")
      return detail::run_torus_kernel(cfg, out);
    if (cfg.command == "extension")
      return detail::run_extension(cfg, out);
    if (cfg.command == "verify-theorem")
      return detail::run_verify_theorem(cfg, out);
    if (cfg.command == "gp-graphs")
      return detail::run_gp_graphs(cfg, out);
    if (cfg.command == "gerbe")
      return detail::run_gerbe(cfg, out);
    fail_input("command: unknown command '" + cfg.command + "'");
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fixedloci
