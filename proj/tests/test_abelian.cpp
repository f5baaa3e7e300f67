#include <catch_amalgamated.hpp>

#include "fixedloci/abelian.hpp"

using namespace fixedloci;

TEST_CASE("cokernel structure on pinned presentations") {
  // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4
  FinAbGroup g = coker_structure(parse_matrix("2,0;0,4"));
  REQUIRE(g.free_rank == 0);
  REQUIRE(g.torsion.moduli == std::vector<Int>{2, 4});
  REQUIRE(format_finab(g) == "Z/2 x Z/4");

  // Z^2 / <(2,1),(0,3)> = Z/6
  g = coker_structure(parse_matrix("2,1;0,3"));
  REQUIRE(format_finab(g) == "Z/6");

  // one relation on two generators leaves a free part
  g = coker_structure(parse_matrix("2,4"));
  REQUIRE(g.free_rank == 0);
  REQUIRE(g.torsion.moduli == std::vector<Int>{2});
  g = coker_structure(parse_matrix("2;4"));
  REQUIRE(g.free_rank == 1);
  REQUIRE(g.torsion.moduli == std::vector<Int>{2});

  // zero relations leave everything free
  g = coker_structure(parse_matrix("0,0;0,0"));
  REQUIRE(g.free_rank == 2);
  REQUIRE(format_finab(g) == "Z^2");
}

TEST_CASE("torus kernel matches the points oracle on pinned cases") {
  // diag(2,4): kernel mu_2 x mu_4, 8 points
  IntMatrix a = parse_matrix("2,0;0,4");
  FinAbGroup k = torus_kernel(a);
  REQUIRE(format_mu(k) == "mu_2 x mu_4");
  REQUIRE(torus_points_kernel_oracle(a, 8) == k);
  REQUIRE(torus_points_kernel_oracle(a, 16) == k);

  // unimodular: trivial kernel
  a = parse_matrix("1,1;0,1");
  k = torus_kernel(a);
  REQUIRE(k.is_trivial());
  REQUIRE(format_mu(k) == "trivial");
  REQUIRE(torus_points_kernel_oracle(a, 1) == k);
  REQUIRE(torus_points_kernel_oracle(a, 12) == k);

  // non-diagonal: 2,1;0,3 has det 6, kernel mu_6
  a = parse_matrix("2,1;0,3");
  k = torus_kernel(a);
  REQUIRE(format_mu(k) == "mu_6");
  REQUIRE(torus_points_kernel_oracle(a, 6) == k);
  REQUIRE(torus_points_kernel_oracle(a, 12) == k);

  // the M-torsion of the kernel is smaller when M misses factors
  FinAbGroup part = torus_points_kernel_oracle(a, 2);
  REQUIRE(format_mu(part) == "mu_2");
}

TEST_CASE("torus kernel rejects non-isogenies") {
  REQUIRE_THROWS_AS(torus_kernel(parse_matrix("1,2;2,4")), input_error);
  REQUIRE_THROWS_AS(torus_kernel(parse_matrix("1,2,3")), input_error);
  REQUIRE_THROWS_WITH(torus_kernel(parse_matrix("1,2;2,4")),
                      Catch::Matchers::ContainsSubstring("singular"));
}

TEST_CASE("points oracle enforces its enumeration cap") {
  IntMatrix a = parse_matrix("2,0,0;0,2,0;0,0,2");
  REQUIRE_THROWS_AS(torus_points_kernel_oracle(a, 1000, 1000), resource_limit_error);
}

TEST_CASE("group formatting round-trips") {
  FinAbGroup g;
  g.free_rank = 2;
  g.torsion.moduli = {2, 6};
  REQUIRE(format_finab(g) == "Z^2 x Z/2 x Z/6");
  REQUIRE(parse_finab("Z^2 x Z/2 x Z/6") == g);
  REQUIRE(parse_finab("Z x Z") == parse_finab("Z^2"));
  REQUIRE(parse_finab("1").is_trivial());
  REQUIRE_THROWS_AS(parse_finab("Z/5 x Z/3"), input_error);  // not a chain
  REQUIRE_THROWS_AS(parse_finab("bogus"), input_error);
}
