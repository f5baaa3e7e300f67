// The bundled verification corpus: small extension/quotient cases
// covering every supported group family, kernel chains up to (2, 4),
// M in {2, 3, 4}, and point sets up to six elements, plus one
// deliberately corrupted control whose kernel map is not central.
//
// The corpus is the single source of truth: the committed JSON copy is
// generated from make_default_corpus and the tests assert they agree.
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixedloci/theorem.hpp"

namespace fixedloci {

namespace detail {

inline std::vector<std::vector<int>> action_from(const FiniteGroup& g, int u,
                                                 const std::function<int(int, int)>& img) {
  std::vector<std::vector<int>> act(g.n, std::vector<int>(u));
  for (int x = 0; x < g.n; ++x)
    for (int p = 0; p < u; ++p)
      act[x][p] = img(x, p);
  return act;
}

inline TheoremCase make_case(const std::string& name, FiniteGroup g, std::vector<Int> r,
                             std::vector<int> iota, int big_m, int u,
                             const std::function<int(int, int)>& img,
                             const std::string& expect = "pass") {
  TheoremCase tc;
  tc.name = name;
  tc.spec.G = std::move(g);
  tc.spec.r.moduli = std::move(r);
  tc.spec.iota.images = std::move(iota);
  tc.spec.M = big_m;
  tc.U_size = u;
  tc.action = action_from(tc.spec.G, u, img);
  tc.expect = expect;
  return tc;
}

inline int fix_point(int, int p) { return p; }

}  // namespace detail

inline std::vector<TheoremCase> make_default_corpus() {
  using detail::make_case;
  const auto fix = detail::fix_point;
  auto swap01 = [](int p) { return p == 0 ? 1 : p == 1 ? 0 : p; };
  auto swap23 = [](int p) { return p == 2 ? 3 : p == 3 ? 2 : p; };

  std::vector<TheoremCase> cases;

  // cyclic order 2
  cases.push_back(make_case("kummer-c2-m2", cyclic(2), {2}, {0, 1}, 2, 1, fix));
  cases.push_back(make_case("kummer-c2-m3", cyclic(2), {2}, {0, 1}, 3, 2, fix));
  cases.push_back(make_case("kummer-c2-m4", cyclic(2), {2}, {0, 1}, 4, 2, fix));
  cases.push_back(make_case("c2-swap-trivial-kernel-m2", cyclic(2), {1}, {0}, 2, 2,
                            [&](int g, int p) { return g == 1 ? swap01(p) : p; }));

  // cyclic order 4
  cases.push_back(make_case("c4-through-c2-m2", cyclic(4), {2}, {0, 2}, 2, 2,
                            [&](int g, int p) { return g % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("c4-point-m3", cyclic(4), {2}, {0, 2}, 3, 1, fix));
  cases.push_back(make_case("c4-full-kernel-m2", cyclic(4), {4}, {0, 1, 2, 3}, 2, 1, fix));
  cases.push_back(make_case("c4-full-kernel-m4", cyclic(4), {4}, {0, 1, 2, 3}, 4, 3, fix));

  // cyclic order 6
  cases.push_back(make_case("c6-halves-m3", cyclic(6), {2}, {0, 3}, 3, 3,
                            [](int g, int p) { return (p + g) % 3; }));
  cases.push_back(make_case("c6-thirds-m2", cyclic(6), {3}, {0, 2, 4}, 2, 2,
                            [&](int g, int p) { return g % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("c6-full-kernel-m2", cyclic(6), {6}, {0, 1, 2, 3, 4, 5}, 2, 1, fix));
  cases.push_back(make_case("c6-six-points-m2", cyclic(6), {2}, {0, 3}, 2, 6,
                            [](int g, int p) { return p < 3 ? (p + g) % 3 : p; }));

  // Klein four-group; element (a, b) has index 2a + b
  cases.push_back(make_case("v4-first-factor-m2", group_from_name("C2xC2"), {2}, {0, 2}, 2, 2,
                            [&](int g, int p) { return g % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("v4-full-kernel-m2", group_from_name("C2xC2"), {2, 2},
                            {0, 1, 2, 3}, 2, 1, fix));
  cases.push_back(make_case("v4-full-kernel-m3", group_from_name("C2xC2"), {2, 2},
                            {0, 1, 2, 3}, 3, 2, fix));
  cases.push_back(make_case("v4-diagonal-m4", group_from_name("C2xC2"), {2}, {0, 3}, 4, 2,
                            [&](int g, int p) { return (g / 2 + g % 2) % 2 ? swap01(p) : p; }));

  // C2 x C4; element (a, b) has index 4a + b
  cases.push_back(make_case("c2xc4-full-kernel-m2", group_from_name("C2xC4"), {2, 4},
                            {0, 1, 2, 3, 4, 5, 6, 7}, 2, 1, fix));
  cases.push_back(make_case("c2xc4-full-kernel-m3", group_from_name("C2xC4"), {2, 4},
                            {0, 1, 2, 3, 4, 5, 6, 7}, 3, 1, fix));
  cases.push_back(make_case("c2xc4-full-kernel-m4", group_from_name("C2xC4"), {2, 4},
                            {0, 1, 2, 3, 4, 5, 6, 7}, 4, 1, fix));
  cases.push_back(make_case("c2xc4-first-c2-m2", group_from_name("C2xC4"), {2}, {0, 4}, 2, 2,
                            [&](int g, int p) { return (g % 4) % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("c2xc4-second-c4-m2", group_from_name("C2xC4"), {4}, {0, 1, 2, 3},
                            2, 2, [&](int g, int p) { return g / 4 ? swap01(p) : p; }));
  cases.push_back(make_case("c2xc4-two-by-two-m2", group_from_name("C2xC4"), {2, 2},
                            {0, 2, 4, 6}, 2, 2,
                            [&](int g, int p) { return (g % 4) % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("c2xc4-two-by-two-m3", group_from_name("C2xC4"), {2, 2},
                            {0, 2, 4, 6}, 3, 2,
                            [&](int g, int p) { return (g % 4) % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("c2xc4-two-by-two-m4", group_from_name("C2xC4"), {2, 2},
                            {0, 2, 4, 6}, 4, 2,
                            [&](int g, int p) { return (g % 4) % 2 ? swap01(p) : p; }));

  // quaternions; indices 0,1 = +-1; 2,3 = +-i; 4,5 = +-j; 6,7 = +-k
  cases.push_back(make_case("q8-center-m2", quaternion8(), {2}, {0, 1}, 2, 1, fix));
  cases.push_back(make_case("q8-jk-swap-m3", quaternion8(), {2}, {0, 1}, 3, 2,
                            [&](int g, int p) { return g / 2 >= 2 ? swap01(p) : p; }));
  cases.push_back(make_case("q8-axes-m4", quaternion8(), {2}, {0, 1}, 4, 4,
                            [&](int g, int p) {
                              int axis = g / 2;
                              if (axis == 1)
                                return swap01(p);
                              if (axis == 2)
                                return swap23(p);
                              if (axis == 3)
                                return swap23(swap01(p));
                              return p;
                            }));
  cases.push_back(make_case("q8-axes-padded-m2", quaternion8(), {2}, {0, 1}, 2, 6,
                            [&](int g, int p) {
                              int axis = g / 2;
                              if (axis == 1)
                                return swap01(p);
                              if (axis == 2)
                                return swap23(p);
                              if (axis == 3)
                                return swap23(swap01(p));
                              return p;
                            }));

  // dihedral of order 8; indices 0..3 rotations, 4..7 reflections
  cases.push_back(make_case("d4-rotation-parity-m2", dihedral(4), {2}, {0, 2}, 2, 2,
                            [&](int g, int p) { return (g % 4) % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("d4-rotation-parity-m3", dihedral(4), {2}, {0, 2}, 3, 3,
                            [&](int g, int p) { return (g % 4) % 2 ? swap01(p) : p; }));
  cases.push_back(make_case("d4-faithful-quotient-m2", dihedral(4), {2}, {0, 2}, 2, 4,
                            [&](int g, int p) {
                              int rot = g % 4, refl = g / 4;
                              int q = rot % 2 ? swap23(swap01(p)) : p;
                              return refl ? (q == 0 ? 2 : q == 2 ? 0 : q == 1 ? 3 : 1) : q;
                            }));
  cases.push_back(make_case("d4-faithful-quotient-m4", dihedral(4), {2}, {0, 2}, 4, 4,
                            [&](int g, int p) {
                              int rot = g % 4, refl = g / 4;
                              int q = rot % 2 ? swap23(swap01(p)) : p;
                              return refl ? (q == 0 ? 2 : q == 2 ? 0 : q == 1 ? 3 : 1) : q;
                            }));

  // corrupted control: the kernel lands on a reflection, which is not
  // central, so validation must reject the spec before any verification
  cases.push_back(make_case("control-noncentral-kernel", dihedral(4), {2}, {0, 4}, 2, 1, fix,
                            "precondition-rejected"));

  return cases;
}

// Extra randomized cases for soak testing: same families, seeded
// generator, always-valid specs with trivial kernels acting trivially.
inline std::vector<TheoremCase> make_random_cases(int count, std::uint64_t seed) {
  require_input(count >= 0, "random cases: count must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<TheoremCase> out;
  const std::vector<std::string> names{"C2", "C4", "C6", "C2xC2", "C2xC4"};
  for (int i = 0; i < count; ++i) {
    FiniteGroup g = group_from_name(names[rng() % names.size()]);
    int big_m = 2 + static_cast<int>(rng() % 3);
    int u = 1 + static_cast<int>(rng() % 3);
    // kernel = the 2-torsion cyclic piece generated by a random
    // involution, or trivial when none is drawn
    std::vector<int> invol{g.e};
    for (int x = 0; x < g.n; ++x)
      if (x != g.e && g.mul(x, x) == g.e && is_central(g, Subgroup{{x}}))
        invol.push_back(x);
    int z = invol[rng() % invol.size()];
    TheoremCase tc;
    tc.name = "random-" + std::to_string(i);
    tc.spec.G = g;
    if (z == g.e) {
      tc.spec.r.moduli = {1};
      tc.spec.iota.images = {g.e};
    } else {
      tc.spec.r.moduli = {2};
      tc.spec.iota.images = {g.e, z};
    }
    tc.spec.M = big_m;
    tc.U_size = u;
    tc.action = detail::action_from(g, u, [](int, int p) { return p; });
    out.push_back(std::move(tc));
  }
  return out;
}

}  // namespace fixedloci
