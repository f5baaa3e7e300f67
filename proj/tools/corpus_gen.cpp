// Writes the bundled verification corpus to JSON. The default output is
// exactly the fixed corpus; --extra appends seeded randomized soak
// cases (fixed default seed, so the output stays reproducible).
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fixedloci/corpus.hpp"
#include "fixedloci/json_io.hpp"

int main(int argc, char** argv) {
  std::string out_path = "data/theorem_corpus.json";
  int extra = 0;
  std::uint64_t seed = 427431;

  CLI::App app{"emit the bundled theorem-verification corpus"};
  app.add_option("--out", out_path, "output path")->capture_default_str();
  app.add_option("--extra", extra, "append this many randomized cases")->capture_default_str();
  app.add_option("--seed", seed, "seed for the randomized cases")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<fixedloci::TheoremCase> cases = fixedloci::make_default_corpus();
    for (fixedloci::TheoremCase& tc : fixedloci::make_random_cases(extra, seed))
      cases.push_back(std::move(tc));
    fixedloci::json payload = fixedloci::corpus_to_json(cases);
    std::ofstream out(out_path);
    if (!out.good()) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    out << payload.dump(2) << "\n";
    std::cout << "wrote " << cases.size() << " cases to " << out_path << "\n";
    return 0;
  } catch (const fixedloci::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
