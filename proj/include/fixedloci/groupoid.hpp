// Finite groupoids in component normal form.
//
// A finite groupoid is stored per connected component: the object list
// and one abstract vertex group A. Morphisms x -> y inside a component
// biject with A once a transversal is fixed, so a morphism is the tuple
// (component, x, y, a) and composition multiplies the a-parts. This
// keeps [U/H] linear in |U|*|H| instead of quadratic in morphism count.
//
// Functors between groupoids are stored in the same normalized
// coordinates (object map, per-component vertex homomorphism, one
// translation element per object); GerbeWitness bundles a functor with
// banding data, and is_banded_gerbe checks the gerbe axioms on it
// exhaustively.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fixedloci/errors.hpp"
#include "fixedloci/extension.hpp"
#include "fixedloci/finite_group.hpp"

namespace fixedloci {

struct GroupoidComponent {
  std::vector<int> objects;  // sorted object ids
  FiniteGroup vertex;        // abstract automorphism group of any object
};

struct FiniteGroupoid {
  int num_objects = 0;
  std::vector<GroupoidComponent> components;  // ordered by least object
  std::vector<int> comp_of;                   // object -> component index

  long long morphism_count() const {
    long long total = 0;
    for (const GroupoidComponent& c : components)
      total += static_cast<long long>(c.objects.size()) * c.objects.size() * c.vertex.n;
    return total;
  }
};

// Action groupoid [U/H] together with the presentation data needed to
// translate between group elements and normalized morphisms.
struct ActionGroupoid {
  FiniteGroupoid gpd;
  FiniteGroup H;
  std::vector<std::vector<int>> act;  // act[h][u]
  std::vector<int> rep;               // component -> chosen base object
  std::vector<int> tau;               // object u -> H element with tau * rep = u
  std::vector<SubgroupAsGroup> stab;  // component -> stabilizer of rep

  // Normalized vertex-group index of an H-element h mapping u -> act[h][u].
  int morphism_label(int c, int u, int h) const {
    int v = act[h][u];
    int elem = H.mul(H.inv(tau[v]), H.mul(h, tau[u]));
    int idx = stab[c].from_parent[elem];
    if (idx < 0)
      throw std::logic_error("action groupoid: morphism label outside stabilizer");
    return idx;
  }
};

inline void validate_action(const FiniteGroup& h, int num_objects,
                            const std::vector<std::vector<int>>& act) {
  require_input(static_cast<int>(act.size()) == h.n,
                "invalid action: need one permutation per group element");
  for (const std::vector<int>& row : act) {
    require_input(static_cast<int>(row.size()) == num_objects,
                  "invalid action: permutation length mismatch");
    std::vector<char> seen(num_objects, 0);
    for (int img : row) {
      require_input(img >= 0 && img < num_objects && !seen[img],
                    "invalid action: images are not a permutation");
      seen[img] = 1;
    }
  }
  for (int u = 0; u < num_objects; ++u)
    require_input(act[h.e][u] == u, "invalid action: identity must act trivially");
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      for (int u = 0; u < num_objects; ++u)
        require_input(act[h.mul(a, b)][u] == act[a][act[b][u]],
                      "invalid action: compatibility with multiplication fails");
}

inline ActionGroupoid action_groupoid(const FiniteGroup& h, int num_objects,
                                      const std::vector<std::vector<int>>& act) {
  require_input(num_objects >= 1, "action groupoid: need at least one object");
  validate_action(h, num_objects, act);
  ActionGroupoid a;
  a.H = h;
  a.act = act;
  a.gpd.num_objects = num_objects;
  a.gpd.comp_of.assign(num_objects, -1);
  a.tau.assign(num_objects, -1);

  for (int u = 0; u < num_objects; ++u) {
    if (a.gpd.comp_of[u] != -1)
      continue;
    const int c = static_cast<int>(a.gpd.components.size());
    // orbit of u; u is its least element because objects are scanned in order
    std::vector<int> orbit;
    for (int g = 0; g < h.n; ++g) {
      int v = act[g][u];
      if (a.gpd.comp_of[v] == -1) {
        a.gpd.comp_of[v] = c;
        a.tau[v] = g;  // first (least) group element carrying u to v
        orbit.push_back(v);
      }
    }
    a.tau[u] = h.e;
    std::sort(orbit.begin(), orbit.end());
    a.rep.push_back(u);
    Subgroup st;
    for (int g = 0; g < h.n; ++g)
      if (act[g][u] == u)
        st.elements.push_back(g);
    a.stab.push_back(subgroup_as_group(h, st));
    GroupoidComponent comp;
    comp.objects = std::move(orbit);
    comp.vertex = a.stab.back().group;
    a.gpd.components.push_back(std::move(comp));
  }
  return a;
}

struct InertiaEntry {
  int orbit_size = 0;
  FiniteGroup aut;
};

// One entry per component: orbit size and automorphism group.
inline std::vector<InertiaEntry> inertia_orders(const FiniteGroupoid& gpd) {
  std::vector<InertiaEntry> out;
  for (const GroupoidComponent& c : gpd.components)
    out.push_back({static_cast<int>(c.objects.size()), c.vertex});
  return out;
}

// The orbit set: one object list per isomorphism class.
inline std::vector<std::vector<int>> coarse_space(const FiniteGroupoid& gpd) {
  std::vector<std::vector<int>> out;
  for (const GroupoidComponent& c : gpd.components)
    out.push_back(c.objects);
  return out;
}

// True iff the components can be matched bijectively with isomorphic
// vertex groups. For finite groupoids this decides equivalence; orbit
// sizes are intentionally ignored (a transitive groupoid is equivalent
// to the one-object groupoid on its vertex group).
inline bool equivalent(const FiniteGroupoid& g1, const FiniteGroupoid& g2) {
  if (g1.components.size() != g2.components.size())
    return false;
  std::vector<char> used(g2.components.size(), 0);
  for (const GroupoidComponent& c1 : g1.components) {
    bool matched = false;
    for (std::size_t j = 0; j < g2.components.size() && !matched; ++j) {
      if (used[j])
        continue;
      if (is_isomorphic(c1.vertex, g2.components[j].vertex)) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched)
      return false;
  }
  return true;
}

// ---- functors and gerbe witnesses ---------------------------------------

// Functor in normalized coordinates: a morphism (c, x, y, a) of the
// source maps to (comp_map[c], obj_map[x], obj_map[y],
// t_y * vertex_map_c(a) * t_x^{-1}) in the target.
struct GerbeWitness {
  FiniteGroupoid source;
  FiniteGroupoid target;
  std::vector<int> comp_map;          // source component -> target component
  std::vector<int> obj_map;           // source object -> target object
  std::vector<GroupHom> vertex_map;   // per source component
  std::vector<int> translate;         // per source object, in target vertex group
  FiniteGroup band;
  std::vector<GroupHom> band_embed;   // per source component: band -> source vertex
};

// Structural well-formedness (throws); the gerbe conditions themselves
// are the business of is_banded_gerbe.
inline void validate_witness(const GerbeWitness& w) {
  const std::size_t nc = w.source.components.size();
  require_input(w.comp_map.size() == nc && w.vertex_map.size() == nc &&
                    w.band_embed.size() == nc,
                "gerbe witness: per-component data sizes disagree");
  require_input(static_cast<int>(w.obj_map.size()) == w.source.num_objects &&
                    static_cast<int>(w.translate.size()) == w.source.num_objects,
                "gerbe witness: per-object data sizes disagree");
  for (std::size_t c = 0; c < nc; ++c) {
    int tc = w.comp_map[c];
    require_input(tc >= 0 && tc < static_cast<int>(w.target.components.size()),
                  "gerbe witness: component map out of range");
    const FiniteGroup& a = w.source.components[c].vertex;
    const FiniteGroup& b = w.target.components[tc].vertex;
    require_input(is_homomorphism(a, b, w.vertex_map[c]),
                  "gerbe witness: vertex map is not a homomorphism");
    require_input(is_homomorphism(w.band, a, w.band_embed[c]),
                  "gerbe witness: band embedding is not a homomorphism");
    for (int x : w.source.components[c].objects) {
      require_input(w.target.comp_of[w.obj_map[x]] == tc,
                    "gerbe witness: object map leaves the image component");
      require_input(w.translate[x] >= 0 && w.translate[x] < b.n,
                    "gerbe witness: translation element out of range");
    }
  }
}

// Banded-gerbe test: essentially surjective, full, kernel of each vertex
// map identified with the band by the embedding, and the identification
// central (hence conjugation-invariant along every morphism).
inline bool is_banded_gerbe(const GerbeWitness& w) {
  validate_witness(w);
  std::vector<char> hit(w.target.components.size(), 0);
  for (std::size_t c = 0; c < w.source.components.size(); ++c) {
    if (hit[w.comp_map[c]])
      return false;  // two source components collide: Hom-emptiness breaks fullness
    hit[w.comp_map[c]] = 1;
  }
  for (char h : hit)
    if (!h)
      return false;  // not essentially surjective
  for (std::size_t c = 0; c < w.source.components.size(); ++c) {
    const FiniteGroup& a = w.source.components[c].vertex;
    const FiniteGroup& b = w.target.components[w.comp_map[c]].vertex;
    // full on automorphisms: vertex map surjective
    std::vector<char> covered(b.n, 0);
    for (int img : w.vertex_map[c].images)
      covered[img] = 1;
    for (char v : covered)
      if (!v)
        return false;
    // kernel = band image, band embedding injective
    if (!is_injective(w.band_embed[c]))
      return false;
    Subgroup kernel = hom_kernel(a, b, w.vertex_map[c]);
    Subgroup band_img = hom_image(w.band_embed[c]);
    if (!(kernel == band_img))
      return false;
    // banding condition: identification commutes with conjugation
    if (!is_central(a, band_img))
      return false;
  }
  return true;
}

// ---- rigidification ------------------------------------------------------

// assignment[u] = subgroup of the vertex group of u's component (element
// indices in that abstract group) to be killed at u.
inline std::pair<FiniteGroupoid, GerbeWitness> rigidify(
    const FiniteGroupoid& gpd, const std::vector<std::vector<int>>& assignment) {
  require_input(static_cast<int>(assignment.size()) == gpd.num_objects,
                "rigidify: need one subgroup per object");
  FiniteGroupoid out;
  out.num_objects = gpd.num_objects;
  out.comp_of = gpd.comp_of;
  GerbeWitness w;
  w.source = gpd;
  w.obj_map.resize(gpd.num_objects);
  for (int u = 0; u < gpd.num_objects; ++u)
    w.obj_map[u] = u;
  w.translate.assign(gpd.num_objects, 0);

  std::optional<FiniteGroup> band;
  for (std::size_t c = 0; c < gpd.components.size(); ++c) {
    const GroupoidComponent& comp = gpd.components[c];
    const FiniteGroup& a = comp.vertex;
    Subgroup k;
    k.elements = assignment[comp.objects[0]];
    std::sort(k.elements.begin(), k.elements.end());
    k.elements.erase(std::unique(k.elements.begin(), k.elements.end()), k.elements.end());
    for (int u : comp.objects) {
      std::vector<int> s = assignment[u];
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      require_input(s == k.elements,
                    "rigidify: assignment is not stable under conjugation "
                    "(differs across objects of one component)");
    }
    require_input(is_subgroup(a, k), "rigidify: assignment is not a subgroup");
    require_input(is_central(a, k),
                  "rigidify: assigned subgroup is not central in the automorphism group");

    SubgroupAsGroup kg = subgroup_as_group(a, k);
    if (!band) {
      band = kg.group;
      w.band = kg.group;
    }
    // identify the band with this component's kernel
    GroupHom emb;
    if (c == 0) {
      emb.images = kg.to_parent;
    } else {
      std::optional<std::vector<int>> iso = find_isomorphism(w.band, kg.group);
      require_input(iso.has_value(),
                    "rigidify: kernel subgroups are not isomorphic across components");
      emb.images.resize(w.band.n);
      for (int z = 0; z < w.band.n; ++z)
        emb.images[z] = kg.to_parent[(*iso)[z]];
    }
    w.band_embed.push_back(std::move(emb));

    QuotientResult qr = quotient(a, k);
    GroupoidComponent newcomp;
    newcomp.objects = comp.objects;
    newcomp.vertex = qr.group;
    out.components.push_back(std::move(newcomp));
    w.comp_map.push_back(static_cast<int>(c));
    w.vertex_map.push_back(std::move(qr.proj));
  }
  w.target = out;
  return {out, w};
}

// Action-groupoid fast path: kill one central trivially-acting subgroup
// K of H at every object. The band identifications are canonical here
// (all vertex copies of K coordinatize the same parent subgroup), so no
// isomorphism search is needed and K may be large.
inline std::pair<FiniteGroupoid, GerbeWitness> rigidify_by_subgroup(const ActionGroupoid& a,
                                                                    const Subgroup& k) {
  for (int g : k.elements)
    for (int u = 0; u < a.gpd.num_objects; ++u)
      require_input(a.act[g][u] == u, "rigidify: subgroup does not act trivially");
  require_input(is_central(a.H, k), "rigidify: subgroup is not central in the group");

  FiniteGroupoid out;
  out.num_objects = a.gpd.num_objects;
  out.comp_of = a.gpd.comp_of;
  GerbeWitness w;
  w.source = a.gpd;
  w.obj_map.resize(a.gpd.num_objects);
  for (int u = 0; u < a.gpd.num_objects; ++u)
    w.obj_map[u] = u;
  w.translate.assign(a.gpd.num_objects, 0);

  std::vector<SubgroupAsGroup> kg(a.gpd.components.size());
  for (std::size_t c = 0; c < a.gpd.components.size(); ++c) {
    Subgroup kc;
    for (int g : k.elements) {
      int idx = a.stab[c].from_parent[g];  // central and trivially acting => in every stabilizer
      if (idx < 0)
        throw std::logic_error("rigidify: trivially-acting element missing from stabilizer");
      kc.elements.push_back(idx);
    }
    std::sort(kc.elements.begin(), kc.elements.end());
    kg[c] = subgroup_as_group(a.gpd.components[c].vertex, kc);

    QuotientResult qr = quotient(a.gpd.components[c].vertex, kc);
    GroupoidComponent newcomp;
    newcomp.objects = a.gpd.components[c].objects;
    newcomp.vertex = qr.group;
    out.components.push_back(std::move(newcomp));
    w.comp_map.push_back(static_cast<int>(c));
    w.vertex_map.push_back(std::move(qr.proj));
  }
  w.band = kg[0].group;
  for (std::size_t c = 0; c < a.gpd.components.size(); ++c) {
    GroupHom emb;
    emb.images.resize(w.band.n);
    for (int i = 0; i < w.band.n; ++i) {
      int parent = a.stab[0].to_parent[kg[0].to_parent[i]];  // element of H
      int idx = a.stab[c].from_parent[parent];
      if (idx < 0)
        throw std::logic_error("rigidify: band element missing from stabilizer");
      emb.images[i] = idx;
    }
    w.band_embed.push_back(std::move(emb));
  }
  w.target = out;
  return {out, w};
}

// Functor between action groupoids over the same object set, induced by
// a group homomorphism phi with act2[phi(h)] = act1[h]; objects map by
// the identity. Band data is supplied by the caller.
inline GerbeWitness witness_from_equivariant_hom(const ActionGroupoid& src,
                                                 const ActionGroupoid& dst,
                                                 const GroupHom& phi,
                                                 const FiniteGroup& band,
                                                 const std::vector<GroupHom>& band_embed) {
  require_input(src.gpd.num_objects == dst.gpd.num_objects,
                "equivariant witness: object sets differ");
  require_input(is_homomorphism(src.H, dst.H, phi),
                "equivariant witness: phi is not a homomorphism");
  for (int h = 0; h < src.H.n; ++h)
    for (int u = 0; u < src.gpd.num_objects; ++u)
      require_input(dst.act[phi.images[h]][u] == src.act[h][u],
                    "equivariant witness: phi is not action-compatible");

  GerbeWitness w;
  w.source = src.gpd;
  w.target = dst.gpd;
  w.band = band;
  w.band_embed = band_embed;
  w.obj_map.resize(src.gpd.num_objects);
  for (int u = 0; u < src.gpd.num_objects; ++u)
    w.obj_map[u] = u;
  w.translate.assign(src.gpd.num_objects, -1);
  for (std::size_t c = 0; c < src.gpd.components.size(); ++c) {
    const int r1 = src.rep[c];
    const int tc = dst.gpd.comp_of[r1];
    w.comp_map.push_back(tc);
    const int r2 = dst.rep[tc];
    // vertex map: a -> tau2_r1^{-1} phi(a~) tau2_r1 in Stab(r2) coordinates
    GroupHom vm;
    vm.images.resize(src.stab[c].group.n);
    const int t_r1 = dst.tau[r1];
    for (int i = 0; i < src.stab[c].group.n; ++i) {
      int h = src.stab[c].to_parent[i];
      int img =
          dst.H.mul(dst.H.inv(t_r1), dst.H.mul(phi.images[h], t_r1));
      int idx = dst.stab[tc].from_parent[img];
      if (idx < 0)
        throw std::logic_error("equivariant witness: image leaves the stabilizer");
      vm.images[i] = idx;
    }
    w.vertex_map.push_back(std::move(vm));
    // translations: t_x = tau2_x^{-1} phi(tau1_x) tau2_r1
    for (int x : src.gpd.components[c].objects) {
      int val = dst.H.mul(dst.H.inv(dst.tau[x]), dst.H.mul(phi.images[src.tau[x]], t_r1));
      int idx = dst.stab[tc].from_parent[val];
      if (idx < 0)
        throw std::logic_error("equivariant witness: translation leaves the stabilizer");
      w.translate[x] = idx;
    }
    (void)r2;
  }
  validate_witness(w);
  return w;
}

// ---- central extensions over a point -------------------------------------

struct CentralExtension {
  FiniteGroup E;
  FiniteGroup Mu;  // the band
  FiniteGroup Q;
  GroupHom embed;  // Mu -> E, injective central
  GroupHom proj;   // E -> Q, surjective, kernel = image(embed)
};

inline CentralExtension make_central_extension(FiniteGroup e, FiniteGroup mu, FiniteGroup q,
                                               GroupHom embed, GroupHom proj) {
  require_input(is_homomorphism(mu, e, embed),
                "central extension: embedding is not a homomorphism");
  require_input(is_injective(embed), "central extension: embedding is not injective");
  require_input(is_central(e, hom_image(embed)),
                "central extension: embedded subgroup is not central");
  require_input(is_homomorphism(e, q, proj),
                "central extension: projection is not a homomorphism");
  require_input(static_cast<int>(hom_image(proj).size()) == q.n,
                "central extension: projection is not surjective");
  require_input(hom_kernel(e, q, proj) == hom_image(embed),
                "central extension: kernel of projection differs from embedded subgroup");
  return CentralExtension{std::move(e), std::move(mu), std::move(q), std::move(embed),
                          std::move(proj)};
}

inline CentralExtension trivial_central_extension(const FiniteGroup& mu,
                                                  const FiniteGroup& q) {
  FiniteGroup e = direct_product(mu, q);
  GroupHom embed, proj;
  embed.images.resize(mu.n);
  for (int z = 0; z < mu.n; ++z)
    embed.images[z] = z * q.n + q.e;
  proj.images.resize(e.n);
  for (int x = 0; x < e.n; ++x)
    proj.images[x] = x % q.n;
  return make_central_extension(std::move(e), mu, q, std::move(embed), std::move(proj));
}

// (E1 x_Q E2) / antidiagonal mu: the group carrying the sum of the two
// extension classes.
inline CentralExtension contracted_product_over_point(const CentralExtension& e1,
                                                      const CentralExtension& e2) {
  require_input(e1.Q.n == e2.Q.n && e1.Q.e == e2.Q.e && e1.Q.table == e2.Q.table,
                "contracted product: mismatched Q");
  require_input(e1.Mu.n == e2.Mu.n && e1.Mu.e == e2.Mu.e && e1.Mu.table == e2.Mu.table,
                "contracted product: mismatched mu");
  FiniteGroup p = direct_product(e1.E, e2.E);
  Subgroup fiber;
  for (int a = 0; a < e1.E.n; ++a)
    for (int b = 0; b < e2.E.n; ++b)
      if (e1.proj.images[a] == e2.proj.images[b])
        fiber.elements.push_back(a * e2.E.n + b);
  SubgroupAsGroup f = subgroup_as_group(p, fiber);

  Subgroup anti;
  for (int z = 0; z < e1.Mu.n; ++z) {
    int pidx = e1.embed.images[z] * e2.E.n + e2.embed.images[e2.Mu.inv(z)];
    anti.elements.push_back(f.from_parent[pidx]);
  }
  std::sort(anti.elements.begin(), anti.elements.end());

  QuotientResult qr = quotient(f.group, anti);
  GroupHom embed;
  embed.images.resize(e1.Mu.n);
  for (int z = 0; z < e1.Mu.n; ++z)
    embed.images[z] =
        qr.proj.images[f.from_parent[e1.embed.images[z] * e2.E.n + e2.E.e]];
  GroupHom proj;
  proj.images.assign(qr.group.n, -1);
  for (int i = 0; i < f.group.n; ++i) {
    int target = e1.proj.images[f.to_parent[i] / e2.E.n];
    int& slot = proj.images[qr.proj.images[i]];
    if (slot == -1)
      slot = target;
    else if (slot != target)
      throw std::logic_error("contracted product: projection not constant on cosets");
  }
  return make_central_extension(qr.group, e1.Mu, e1.Q, std::move(embed), std::move(proj));
}

// Equivalence of central extensions: isomorphism of total groups
// commuting with the embeddings and projections.
inline bool extensions_equivalent(const CentralExtension& e1, const CentralExtension& e2) {
  require_input(e1.Q.table == e2.Q.table && e1.Mu.table == e2.Mu.table,
                "extension equivalence: mismatched Q or mu");
  if (e1.E.n != e2.E.n)
    return false;
  if (e1.E.n > kIsoSearchBound)
    fail_limit("isomorphism search bound exceeded: order " + std::to_string(e1.E.n));
  std::vector<std::pair<int, int>> seed;
  for (int z = 0; z < e1.Mu.n; ++z)
    seed.push_back({e1.embed.images[z], e2.embed.images[z]});
  auto filter = [&](int g, int h) { return e1.proj.images[g] == e2.proj.images[h]; };
  return detail::isomorphism_search(e1.E, e2.E, seed, filter).has_value();
}

}  // namespace fixedloci
