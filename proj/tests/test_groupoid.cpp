#include <catch2/catch_amalgamated.hpp>

#include "fixedloci/groupoid.hpp"

using namespace fixedloci;

namespace {

// act[g][u] = (u + g) mod num_objects for cyclic H
std::vector<std::vector<int>> rotation_action(int order, int num_objects) {
  std::vector<std::vector<int>> act(order, std::vector<int>(num_objects));
  for (int g = 0; g < order; ++g)
    for (int u = 0; u < num_objects; ++u)
      act[g][u] = (u + g) % num_objects;
  return act;
}

std::vector<std::vector<int>> trivial_action(int order, int num_objects) {
  std::vector<std::vector<int>> act(order, std::vector<int>(num_objects));
  for (int g = 0; g < order; ++g)
    for (int u = 0; u < num_objects; ++u)
      act[g][u] = u;
  return act;
}

ActionGroupoid point_groupoid(const FiniteGroup& g) {
  return action_groupoid(g, 1, trivial_action(g.n, 1));
}

}  // namespace

TEST_CASE("action validation rejects malformed actions") {
  FiniteGroup c2 = cyclic(2);
  REQUIRE_THROWS_WITH(validate_action(c2, 2, {{0, 1}}),
                      Catch::Matchers::ContainsSubstring("one permutation per group element"));
  REQUIRE_THROWS_WITH(validate_action(c2, 2, {{0, 1}, {0}}),
                      Catch::Matchers::ContainsSubstring("length mismatch"));
  REQUIRE_THROWS_WITH(validate_action(c2, 2, {{0, 1}, {0, 0}}),
                      Catch::Matchers::ContainsSubstring("not a permutation"));
  REQUIRE_THROWS_WITH(validate_action(c2, 2, {{1, 0}, {0, 1}}),
                      Catch::Matchers::ContainsSubstring("identity must act trivially"));
  FiniteGroup c4 = cyclic(4);
  // each generator swap is a permutation but squares don't compose
  REQUIRE_THROWS_WITH(validate_action(c4, 2, {{0, 1}, {1, 0}, {1, 0}, {0, 1}}),
                      Catch::Matchers::ContainsSubstring("compatibility"));
}

TEST_CASE("free orbit collapses to a point groupoid") {
  FiniteGroup c4 = cyclic(4);
  ActionGroupoid a = action_groupoid(c4, 4, rotation_action(4, 4));
  REQUIRE(a.gpd.components.size() == 1);
  REQUIRE(a.gpd.components[0].objects == std::vector<int>{0, 1, 2, 3});
  REQUIRE(a.gpd.components[0].vertex.n == 1);
  REQUIRE(a.gpd.morphism_count() == 16);

  std::vector<InertiaEntry> inert = inertia_orders(a.gpd);
  REQUIRE(inert.size() == 1);
  REQUIRE(inert[0].orbit_size == 4);
  REQUIRE(inert[0].aut.n == 1);

  ActionGroupoid pt = point_groupoid(cyclic(1));
  REQUIRE(equivalent(a.gpd, pt.gpd));  // orbit size is not an invariant
}

TEST_CASE("trivial action gives one component per object") {
  FiniteGroup c2 = cyclic(2);
  ActionGroupoid a = action_groupoid(c2, 3, trivial_action(2, 3));
  REQUIRE(a.gpd.components.size() == 3);
  REQUIRE(coarse_space(a.gpd) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
  for (const GroupoidComponent& c : a.gpd.components)
    REQUIRE(c.vertex.n == 2);
  REQUIRE(a.gpd.morphism_count() == 6);
  REQUIRE_FALSE(equivalent(a.gpd, point_groupoid(c2).gpd));
}

TEST_CASE("morphism labels land in the stabilizer") {
  // C4 acting through its mod-2 quotient: stabilizers are {0,2}
  FiniteGroup c4 = cyclic(4);
  std::vector<std::vector<int>> act(4, std::vector<int>(2));
  for (int g = 0; g < 4; ++g)
    for (int u = 0; u < 2; ++u)
      act[g][u] = (u + g) % 2;
  ActionGroupoid a = action_groupoid(c4, 2, act);
  REQUIRE(a.gpd.components.size() == 1);
  REQUIRE(a.stab[0].group.n == 2);
  REQUIRE(a.morphism_label(0, 0, 0) == 0);  // identity loop
  REQUIRE(a.morphism_label(0, 0, 2) == 1);  // the hidden stabilizer generator
  // 1 and 3 both carry 0 -> 1; they differ by the stabilizer
  REQUIRE(a.morphism_label(0, 0, 1) != a.morphism_label(0, 0, 3));
}

TEST_CASE("rigidifying a cyclic vertex group by its square subgroup") {
  ActionGroupoid b4 = point_groupoid(cyclic(4));
  auto [out, w] = rigidify(b4.gpd, {{0, 2}});
  REQUIRE(out.components.size() == 1);
  REQUIRE(out.components[0].vertex.n == 2);
  REQUIRE(w.band.n == 2);
  REQUIRE(is_banded_gerbe(w));
  REQUIRE(equivalent(out, point_groupoid(cyclic(2)).gpd));
}

TEST_CASE("rigidifying by the full vertex group yields a point") {
  ActionGroupoid b2 = point_groupoid(cyclic(2));
  auto [out, w] = rigidify(b2.gpd, {{0, 1}});
  REQUIRE(out.components[0].vertex.n == 1);
  REQUIRE(is_banded_gerbe(w));
  REQUIRE(equivalent(out, point_groupoid(cyclic(1)).gpd));
}

TEST_CASE("rigidifying the quaternion point by its center") {
  ActionGroupoid bq8 = point_groupoid(quaternion8());
  auto [out, w] = rigidify(bq8.gpd, {{0, 1}});
  REQUIRE(out.components[0].vertex.n == 4);
  REQUIRE(out.components[0].vertex.is_abelian());
  REQUIRE(is_banded_gerbe(w));
  REQUIRE(equivalent(out, point_groupoid(group_from_name("C2xC2")).gpd));
  REQUIRE_FALSE(equivalent(out, point_groupoid(cyclic(4)).gpd));
}

TEST_CASE("rigidify rejects bad assignments") {
  ActionGroupoid bq8 = point_groupoid(quaternion8());
  REQUIRE_THROWS_WITH(rigidify(bq8.gpd, {{0, 1, 2, 3}}),
                      Catch::Matchers::ContainsSubstring("not central"));
  REQUIRE_THROWS_WITH(rigidify(bq8.gpd, {{1}}),
                      Catch::Matchers::ContainsSubstring("not a subgroup"));

  FiniteGroup c4 = cyclic(4);
  std::vector<std::vector<int>> act(4, std::vector<int>(2));
  for (int g = 0; g < 4; ++g)
    for (int u = 0; u < 2; ++u)
      act[g][u] = (u + g) % 2;
  ActionGroupoid a = action_groupoid(c4, 2, act);
  REQUIRE_THROWS_WITH(rigidify(a.gpd, {{0}, {0, 1}}),
                      Catch::Matchers::ContainsSubstring("not stable under conjugation"));
}

TEST_CASE("subgroup rigidification uses canonical band identifications") {
  FiniteGroup c4 = cyclic(4);
  std::vector<std::vector<int>> act(4, std::vector<int>(2));
  for (int g = 0; g < 4; ++g)
    for (int u = 0; u < 2; ++u)
      act[g][u] = (u + g) % 2;
  ActionGroupoid a = action_groupoid(c4, 2, act);
  Subgroup k;
  k.elements = {0, 2};
  auto [out, w] = rigidify_by_subgroup(a, k);
  REQUIRE(out.components.size() == 1);
  REQUIRE(out.components[0].vertex.n == 1);
  REQUIRE(w.band.n == 2);
  REQUIRE(is_banded_gerbe(w));

  Subgroup whole;
  whole.elements = {0, 1, 2, 3};
  REQUIRE_THROWS_WITH(rigidify_by_subgroup(a, whole),
                      Catch::Matchers::ContainsSubstring("does not act trivially"));

  ActionGroupoid bd4 = point_groupoid(dihedral(4));
  Subgroup rot;
  rot.elements = {0, 1, 2, 3};
  REQUIRE_THROWS_WITH(rigidify_by_subgroup(bd4, rot),
                      Catch::Matchers::ContainsSubstring("not central in the group"));
}

TEST_CASE("colliding components are not a gerbe") {
  ActionGroupoid two = action_groupoid(cyclic(1), 2, trivial_action(1, 2));
  ActionGroupoid one = point_groupoid(cyclic(1));
  GerbeWitness w;
  w.source = two.gpd;
  w.target = one.gpd;
  w.comp_map = {0, 0};
  w.obj_map = {0, 0};
  GroupHom triv;
  triv.images = {0};
  w.vertex_map = {triv, triv};
  w.translate = {0, 0};
  w.band = cyclic(1);
  w.band_embed = {triv, triv};
  REQUIRE_NOTHROW(validate_witness(w));
  REQUIRE_FALSE(is_banded_gerbe(w));
}

TEST_CASE("equivariant quotient map is a banded gerbe") {
  FiniteGroup c4 = cyclic(4);
  FiniteGroup c2 = cyclic(2);
  std::vector<std::vector<int>> act4(4, std::vector<int>(2)), act2(2, std::vector<int>(2));
  for (int g = 0; g < 4; ++g)
    for (int u = 0; u < 2; ++u)
      act4[g][u] = (u + g) % 2;
  for (int g = 0; g < 2; ++g)
    for (int u = 0; u < 2; ++u)
      act2[g][u] = (u + g) % 2;
  ActionGroupoid src = action_groupoid(c4, 2, act4);
  ActionGroupoid dst = action_groupoid(c2, 2, act2);
  GroupHom phi;
  phi.images = {0, 1, 0, 1};
  GroupHom emb;
  emb.images = {0, 1};  // band C2 onto the abstract stabilizer {0,2}
  GerbeWitness w = witness_from_equivariant_hom(src, dst, phi, cyclic(2), {emb});
  REQUIRE(is_banded_gerbe(w));

  GroupHom bad_phi;
  bad_phi.images = {0, 0, 0, 0};
  REQUIRE_THROWS_WITH(witness_from_equivariant_hom(src, dst, bad_phi, cyclic(2), {emb}),
                      Catch::Matchers::ContainsSubstring("not action-compatible"));
}

TEST_CASE("extension classes add under contracted product") {
  // Z/4 as a central extension of Z/2 by Z/2
  FiniteGroup c4 = cyclic(4), c2 = cyclic(2);
  GroupHom embed, proj;
  embed.images = {0, 2};
  proj.images = {0, 1, 0, 1};
  CentralExtension nontriv = make_central_extension(c4, c2, c2, embed, proj);
  CentralExtension triv = trivial_central_extension(c2, c2);

  REQUIRE_FALSE(extensions_equivalent(nontriv, triv));
  REQUIRE(extensions_equivalent(nontriv, nontriv));

  // the class has order two: the contracted square is split
  CentralExtension sq = contracted_product_over_point(nontriv, nontriv);
  REQUIRE(sq.E.n == 4);
  REQUIRE(is_isomorphic(sq.E, group_from_name("C2xC2")));
  REQUIRE(extensions_equivalent(sq, triv));

  // adding the trivial class changes nothing
  CentralExtension shifted = contracted_product_over_point(nontriv, triv);
  REQUIRE(extensions_equivalent(shifted, nontriv));

  FiniteGroup c3 = cyclic(3);
  REQUIRE_THROWS_WITH(
      contracted_product_over_point(nontriv, trivial_central_extension(c2, c3)),
      Catch::Matchers::ContainsSubstring("mismatched Q"));
}

TEST_CASE("central extension validation names the failing axiom") {
  FiniteGroup c4 = cyclic(4), c2 = cyclic(2);
  GroupHom embed, proj;
  embed.images = {0, 2};
  proj.images = {0, 1, 0, 1};
  GroupHom bad_embed;
  bad_embed.images = {0, 0};
  REQUIRE_THROWS_WITH(make_central_extension(c4, c2, c2, bad_embed, proj),
                      Catch::Matchers::ContainsSubstring("not injective"));
  GroupHom bad_proj;
  bad_proj.images = {0, 0, 0, 0};
  REQUIRE_THROWS_WITH(make_central_extension(c4, c2, c2, embed, bad_proj),
                      Catch::Matchers::ContainsSubstring("not surjective"));
  // D4 has noncentral order-2 subgroups: reflection embedding must fail
  FiniteGroup d4 = dihedral(4);
  GroupHom refl_embed;
  refl_embed.images = {0, 4};
  GroupHom to_v4 = quotient(d4, Subgroup{{0, 2}}).proj;
  REQUIRE_THROWS_WITH(
      make_central_extension(d4, c2, quotient(d4, Subgroup{{0, 2}}).group, refl_embed, to_v4),
      Catch::Matchers::ContainsSubstring("not central"));
}
