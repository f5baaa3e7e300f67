#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "fixedloci/corpus.hpp"
#include "fixedloci/theorem.hpp"

using namespace fixedloci;

namespace {

TheoremCase corpus_case(const std::string& name) {
  std::vector<TheoremCase> all = make_default_corpus();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const TheoremCase& tc) { return tc.name == name; });
  REQUIRE(it != all.end());
  return *it;
}

void require_all_parts(const TheoremReport& rep) {
  CHECK(rep.split_ok);
  CHECK(rep.central_ok);
  CHECK(rep.pushout_ok);
  CHECK(rep.part1_ok);
  CHECK(rep.part2_ok);
  CHECK(rep.part3_ok);
  CHECK(rep.remark_ok);
  CHECK(rep.sweep_ok);
  REQUIRE(rep.all_ok());
}

}  // namespace

TEST_CASE("trivially-acting subgroup extraction") {
  FiniteGroup c4 = cyclic(4);
  std::vector<std::vector<int>> act(4, std::vector<int>(2));
  for (int g = 0; g < 4; ++g)
    for (int u = 0; u < 2; ++u)
      act[g][u] = (u + g) % 2;
  Subgroup s = trivially_acting(c4, act);
  REQUIRE(s.elements == std::vector<int>{0, 2});
}

TEST_CASE("abelian subgroup enumeration") {
  FiniteGroup c12 = cyclic(12);
  Subgroup whole;
  for (int i = 0; i < 12; ++i)
    whole.elements.push_back(i);
  REQUIRE(subgroups_of_abelian(c12, whole).size() == 6);

  FiniteGroup v4 = group_from_name("C2xC2");
  Subgroup w4;
  w4.elements = {0, 1, 2, 3};
  REQUIRE(subgroups_of_abelian(v4, w4).size() == 5);

  FiniteGroup d4 = dihedral(4);
  Subgroup bad;
  bad.elements = {0, 1, 2, 3, 4, 5, 6, 7};
  REQUIRE_THROWS_WITH(subgroups_of_abelian(d4, bad),
                      Catch::Matchers::ContainsSubstring("not abelian"));
}

TEST_CASE("simplest Kummer case verifies end to end") {
  TheoremReport rep = verify_main_theorem(corpus_case("kummer-c2-m2"));
  require_all_parts(rep);
  REQUIRE(rep.name == "kummer-c2-m2");
  REQUIRE_THAT(rep.details, Catch::Matchers::ContainsSubstring("|Gamma| = 4"));
  REQUIRE_THAT(rep.details, Catch::Matchers::ContainsSubstring("Gbar = C1"));
}

TEST_CASE("cyclic four acting through its parity quotient") {
  require_all_parts(verify_main_theorem(corpus_case("c4-through-c2-m2")));
}

TEST_CASE("quaternion center case") {
  TheoremReport rep = verify_main_theorem(corpus_case("q8-center-m2"));
  require_all_parts(rep);
  REQUIRE_THAT(rep.details, Catch::Matchers::ContainsSubstring("Gbar = C2xC2"));
}

TEST_CASE("dihedral rotation-parity case") {
  require_all_parts(verify_main_theorem(corpus_case("d4-rotation-parity-m2")));
}

TEST_CASE("trivial kernel chain still verifies") {
  require_all_parts(verify_main_theorem(corpus_case("c2-swap-trivial-kernel-m2")));
}

TEST_CASE("rank-two kernel with a faithful complement") {
  require_all_parts(verify_main_theorem(corpus_case("c2xc4-two-by-two-m3")));
}

TEST_CASE("noncentral kernel is rejected before any verification") {
  TheoremCase tc = corpus_case("control-noncentral-kernel");
  REQUIRE(tc.expect == "precondition-rejected");
  REQUIRE_THROWS_AS(verify_main_theorem(tc), input_error);
  REQUIRE_THROWS_WITH(verify_main_theorem(tc),
                      Catch::Matchers::ContainsSubstring("not central"));
}

TEST_CASE("kernel acting nontrivially on U is rejected") {
  TheoremCase tc = corpus_case("kummer-c2-m2");
  tc.U_size = 2;
  tc.action = {{0, 1}, {1, 0}};  // the kernel generator now swaps the points
  REQUIRE_THROWS_WITH(verify_main_theorem(tc),
                      Catch::Matchers::ContainsSubstring("must act trivially on U"));
}

TEST_CASE("every bundled corpus case behaves as annotated") {
  int passed = 0, rejected = 0;
  for (const TheoremCase& tc : make_default_corpus()) {
    if (tc.expect == "precondition-rejected") {
      REQUIRE_THROWS_AS(verify_main_theorem(tc), input_error);
      ++rejected;
    } else {
      TheoremReport rep = verify_main_theorem(tc);
      INFO(tc.name << ": " << rep.details);
      REQUIRE(rep.all_ok());
      ++passed;
    }
  }
  REQUIRE(passed == 32);
  REQUIRE(rejected == 1);
}

TEST_CASE("randomized corpus extras are well-formed and pass") {
  std::vector<TheoremCase> extra = make_random_cases(4, 20260816);
  REQUIRE(extra.size() == 4);
  for (const TheoremCase& tc : extra)
    REQUIRE(verify_main_theorem(tc).all_ok());
}
