// Finite groups as explicit multiplication tables.
//
// Everything here is a plain value: FiniteGroup owns its table (indices
// are 0-based, uint16, so orders are capped at 1024 which is far above
// anything the extension machinery builds). Named constructors cover the
// groups the rest of the library needs; direct_product and quotient
// build the rest. The isomorphism test is exact: censuses plus an
// invariant-factor comparison for abelian groups, and a pruned
// generator-image backtracking search otherwise, with a hard order bound
// of 64 per call.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixedloci/abelian.hpp"
#include "fixedloci/errors.hpp"

namespace fixedloci {

constexpr int kIsoSearchBound = 64;
constexpr int kMaxGroupOrder = 1024;

struct FiniteGroup {
  int n = 1;                         // order
  int e = 0;                         // identity index
  std::vector<std::uint16_t> table;  // n*n, row-major: table[a*n+b] = a*b
  std::string name;                  // display only; ignored by comparisons

  FiniteGroup() : table{0} {}

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }

  int inv(int a) const {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == e)
        return b;
    fail_input("group table: element " + std::to_string(a) + " has no inverse");
  }

  int power(int a, long long k) const {
    int r = e;
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    for (; k > 0; --k)
      r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int r = a, ord = 1;
    while (r != e) {
      r = mul(r, a);
      ++ord;
    }
    return ord;
  }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  // Full axiom check. Associativity is cubic, so callers gate it by size;
  // groups assembled by the constructors below are valid by construction.
  void validate(int assoc_bound = 256) const {
    require_input(n >= 1 && static_cast<int>(table.size()) == n * n, "group table: bad size");
    require_input(n <= kMaxGroupOrder, "group table: order exceeds supported maximum");
    for (std::uint16_t v : table)
      require_input(v < n, "group table: entry out of range");
    require_input(e >= 0 && e < n, "group table: identity index out of range");
    for (int a = 0; a < n; ++a)
      require_input(mul(e, a) == a && mul(a, e) == a, "group table: identity law fails");
    for (int a = 0; a < n; ++a) {
      bool has_inv = false;
      for (int b = 0; b < n && !has_inv; ++b)
        has_inv = mul(a, b) == e && mul(b, a) == e;
      require_input(has_inv, "group table: missing inverse");
    }
    if (n <= assoc_bound)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            require_input(mul(mul(a, b), c) == mul(a, mul(b, c)),
                          "group table: associativity fails");
  }

  std::map<int, int> order_census() const {
    std::map<int, int> census;
    for (int a = 0; a < n; ++a)
      ++census[element_order(a)];
    return census;
  }
};

inline FiniteGroup cyclic(int m) {
  require_input(m >= 1, "cyclic: order must be positive");
  require_input(m <= kMaxGroupOrder, "cyclic: order exceeds supported maximum");
  FiniteGroup g;
  g.n = m;
  g.e = 0;
  g.name = "C" + std::to_string(m);
  g.table.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      g.table[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>((a + b) % m);
  return g;
}

// Order 2m: index a in [0,m) is the rotation r^a, index m+a is r^a s,
// with the relation s r = r^-1 s.
inline FiniteGroup dihedral(int m) {
  require_input(m >= 3, "dihedral: need at least 3 rotations");
  require_input(2 * m <= kMaxGroupOrder, "dihedral: order exceeds supported maximum");
  FiniteGroup g;
  g.n = 2 * m;
  g.e = 0;
  g.name = m == 3 ? "S3" : "D" + std::to_string(m);
  g.table.assign(static_cast<std::size_t>(g.n) * g.n, 0);
  auto idx = [m](int a, int f) { return a + m * f; };
  for (int a = 0; a < m; ++a)
    for (int f = 0; f < 2; ++f)
      for (int b = 0; b < m; ++b)
        for (int d = 0; d < 2; ++d) {
          int rot = f ? (a - b + m) % m : (a + b) % m;
          g.table[static_cast<std::size_t>(idx(a, f)) * g.n + idx(b, d)] =
              static_cast<std::uint16_t>(idx(rot, (f + d) % 2));
        }
  return g;
}

inline FiniteGroup symmetric3() { return dihedral(3); }

// Indices: 0,1 = +-1; 2,3 = +-i; 4,5 = +-j; 6,7 = +-k.
inline FiniteGroup quaternion8() {
  FiniteGroup g;
  g.n = 8;
  g.e = 0;
  g.name = "Q8";
  g.table.assign(64, 0);
  // axis products in the basis (1, i, j, k): result axis and sign
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax1 = a / 2, s1 = a % 2, ax2 = b / 2, s2 = b % 2;
      int axr = ax[ax1][ax2];
      int sr = (s1 + s2 + sg[ax1][ax2]) % 2;
      g.table[static_cast<std::size_t>(a) * 8 + b] = static_cast<std::uint16_t>(axr * 2 + sr);
    }
  return g;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  require_input(static_cast<long long>(a.n) * b.n <= kMaxGroupOrder,
                "direct_product: order exceeds supported maximum");
  FiniteGroup g;
  g.n = a.n * b.n;
  g.e = a.e * b.n + b.e;
  if (!a.name.empty() && !b.name.empty())
    g.name = a.name + "x" + b.name;
  g.table.assign(static_cast<std::size_t>(g.n) * g.n, 0);
  for (int a1 = 0; a1 < a.n; ++a1)
    for (int b1 = 0; b1 < b.n; ++b1)
      for (int a2 = 0; a2 < a.n; ++a2)
        for (int b2 = 0; b2 < b.n; ++b2)
          g.table[static_cast<std::size_t>(a1 * b.n + b1) * g.n + (a2 * b.n + b2)] =
              static_cast<std::uint16_t>(a.mul(a1, a2) * b.n + b.mul(b1, b2));
  return g;
}

// Names: "C<n>", "Q8", "S3", "D4", and x-products of those ("C2xC4").
inline FiniteGroup group_from_name(const std::string& name) {
  std::string stripped;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)))
      stripped += c;
  require_input(!stripped.empty(), "group name: empty");
  std::optional<FiniteGroup> acc;
  for (const std::string& tok : detail::split(stripped, 'x')) {
    FiniteGroup g;
    if (tok == "Q8") {
      g = quaternion8();
    } else if (tok == "S3") {
      g = symmetric3();
    } else if (tok.size() >= 2 && tok[0] == 'D') {
      Int m = detail::parse_int_token(tok.substr(1), 0, 0);
      require_input(m >= 3 && m <= 512, "group name: bad dihedral order in '" + tok + "'");
      g = dihedral(static_cast<int>(m));
    } else if (tok.size() >= 2 && tok[0] == 'C') {
      Int m = detail::parse_int_token(tok.substr(1), 0, 0);
      require_input(m >= 1 && m <= kMaxGroupOrder, "group name: bad cyclic order in '" + tok + "'");
      g = cyclic(static_cast<int>(m));
    } else {
      fail_input("group name: unrecognized token '" + tok + "'");
    }
    acc = acc ? direct_product(*acc, g) : g;
  }
  FiniteGroup out = *acc;
  out.name = stripped;
  return out;
}

// ---- subgroups ---------------------------------------------------------

// Sorted element indices; always contains the identity of its parent.
struct Subgroup {
  std::vector<int> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const { return elements < o.elements; }
};

inline Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
  std::vector<char> in(g.n, 0);
  std::vector<int> stack{g.e};
  in[g.e] = 1;
  for (int x : gens) {
    require_input(x >= 0 && x < g.n, "subgroup generators: index out of range");
    if (!in[x]) {
      in[x] = 1;
      stack.push_back(x);
    }
  }
  std::vector<int> members = stack;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int p : {g.mul(x, members[i]), g.mul(members[i], x)})
        if (!in[p]) {
          in[p] = 1;
          stack.push_back(p);
          members.push_back(p);
        }
    }
  }
  Subgroup s;
  for (int x = 0; x < g.n; ++x)
    if (in[x])
      s.elements.push_back(x);
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.elements.empty() || !s.contains(g.e))
    return false;
  for (int a : s.elements) {
    if (a < 0 || a >= g.n)
      return false;
    for (int b : s.elements)
      if (!s.contains(g.mul(a, b)))
        return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (int x = 0; x < g.n; ++x) {
    int xi = g.inv(x);
    for (int a : s.elements)
      if (!s.contains(g.mul(g.mul(x, a), xi)))
        return false;
  }
  return true;
}

inline bool is_central(const FiniteGroup& g, const Subgroup& s) {
  for (int a : s.elements)
    for (int x = 0; x < g.n; ++x)
      if (g.mul(a, x) != g.mul(x, a))
        return false;
  return true;
}

inline Subgroup center(const FiniteGroup& g) {
  Subgroup s;
  for (int a = 0; a < g.n; ++a) {
    bool central = true;
    for (int x = 0; x < g.n && central; ++x)
      central = g.mul(a, x) == g.mul(x, a);
    if (central)
      s.elements.push_back(a);
  }
  return s;
}

// All subgroups of g contained in the (small) element set `within`,
// which must itself be a subgroup. Intended for central subgroups.
inline std::vector<Subgroup> subgroups_within(const FiniteGroup& g, const Subgroup& within) {
  require_input(within.size() <= 16, "subgroups_within: ambient subgroup too large");
  std::vector<Subgroup> out;
  const std::size_t k = within.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> gens;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i))
        gens.push_back(within.elements[i]);
    Subgroup s = subgroup_closure(g, gens);
    if (s.size() > within.size())
      continue;  // generators escaped `within`; cannot happen if it is closed
    bool inside = true;
    for (int x : s.elements)
      if (!within.contains(x)) {
        inside = false;
        break;
      }
    if (inside && std::find(out.begin(), out.end(), s) == out.end())
      out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Abstract group on the elements of s, plus the index maps both ways.
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};

inline SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  require_input(is_subgroup(g, s), "subgroup_as_group: set is not a subgroup");
  SubgroupAsGroup out;
  out.to_parent = s.elements;
  out.from_parent.assign(g.n, -1);
  for (std::size_t i = 0; i < s.elements.size(); ++i)
    out.from_parent[s.elements[i]] = static_cast<int>(i);
  const int m = static_cast<int>(s.size());
  out.group.n = m;
  out.group.e = out.from_parent[g.e];
  out.group.table.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out.group.table[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint16_t>(
          out.from_parent[g.mul(out.to_parent[a], out.to_parent[b])]);
  return out;
}

// ---- homomorphisms -------------------------------------------------------

struct GroupHom {
  std::vector<int> images;  // images[x] = image of source element x
};

inline bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupHom& f) {
  if (static_cast<int>(f.images.size()) != src.n)
    return false;
  for (int x : f.images)
    if (x < 0 || x >= dst.n)
      return false;
  for (int a = 0; a < src.n; ++a)
    for (int b = 0; b < src.n; ++b)
      if (f.images[src.mul(a, b)] != dst.mul(f.images[a], f.images[b]))
        return false;
  return true;
}

inline bool is_injective(const GroupHom& f) {
  std::vector<int> seen;
  for (int x : f.images)
    seen.push_back(x);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

inline Subgroup hom_kernel(const FiniteGroup& src, const FiniteGroup& dst, const GroupHom& f) {
  Subgroup s;
  for (int a = 0; a < src.n; ++a)
    if (f.images[a] == dst.e)
      s.elements.push_back(a);
  return s;
}

inline Subgroup hom_image(const GroupHom& f) {
  Subgroup s;
  s.elements = f.images;
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
  return s;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup s;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(s.elements));
  return s;
}

inline bool subgroup_le(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                       a.elements.end());
}

// ---- quotients -----------------------------------------------------------

struct QuotientResult {
  FiniteGroup group;
  GroupHom proj;  // parent element -> coset index
};

// Cosets are labeled by their least element, in increasing order of that
// label, so the construction is deterministic.
inline QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  require_input(is_subgroup(g, n), "quotient: set is not a subgroup");
  require_input(is_normal(g, n), "quotient: subgroup is not normal");
  std::vector<int> coset_min(g.n, -1);
  for (int x = 0; x < g.n; ++x) {
    if (coset_min[x] != -1)
      continue;
    int least = x;  // elements are scanned in increasing order
    std::vector<int> coset;
    for (int a : n.elements)
      coset.push_back(g.mul(x, a));
    for (int y : coset)
      coset_min[y] = least;
  }
  std::vector<int> reps;
  for (int x = 0; x < g.n; ++x)
    if (coset_min[x] == x)
      reps.push_back(x);
  std::vector<int> index_of(g.n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    index_of[reps[i]] = static_cast<int>(i);

  QuotientResult out;
  const int q = static_cast<int>(reps.size());
  out.group.n = q;
  out.group.e = index_of[coset_min[g.e]];
  out.group.table.assign(static_cast<std::size_t>(q) * q, 0);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      out.group.table[static_cast<std::size_t>(i) * q + j] =
          static_cast<std::uint16_t>(index_of[coset_min[g.mul(reps[i], reps[j])]]);
  out.proj.images.resize(g.n);
  for (int x = 0; x < g.n; ++x)
    out.proj.images[x] = index_of[coset_min[x]];
  return out;
}

// ---- isomorphism ---------------------------------------------------------

inline DivisorChain invariant_factors_of_abelian(const FiniteGroup& g) {
  require_input(g.is_abelian(), "invariant factors: group is not abelian");
  std::map<Int, std::vector<int>> exps;
  std::size_t max_factors = 0;
  for (const auto& [p, e0] : detail::factorize(Int(g.n))) {
    (void)e0;
    const int p32 = static_cast<int>(p);
    std::vector<int> ge;  // ge[j-1] = # invariant factors with p-exponent >= j
    int prev = 1;         // # x with p^0 x = 0
    long long pj = p32;
    for (;;) {
      int cj = 0;
      for (int x = 0; x < g.n; ++x)
        if (g.power(x, pj) == g.e)
          ++cj;
      if (cj == prev)
        break;
      int ratio = cj / prev, k = 0;
      while (ratio > 1) {
        ratio /= p32;
        ++k;
      }
      ge.push_back(k);
      prev = cj;
      pj *= p32;
    }
    std::vector<int> factor_exps;
    if (!ge.empty())
      for (int i = 1; i <= ge[0]; ++i) {
        int cnt = 0;
        for (int kj : ge)
          if (kj >= i)
            ++cnt;
        factor_exps.push_back(cnt);
      }
    max_factors = std::max(max_factors, factor_exps.size());
    exps[p] = std::move(factor_exps);
  }
  std::vector<Int> desc = detail::invariant_factors_from_exponents(std::move(exps), max_factors);
  DivisorChain chain;
  for (const Int& d : desc)
    if (d > 1)
      chain.moduli.push_back(d);
  return chain;
}

namespace detail {

// Backtracking search for an isomorphism g -> h extending `seed` pairs,
// where every assigned image must satisfy `filter`. Returns the full
// image vector on success.
inline std::optional<std::vector<int>> isomorphism_search(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::vector<std::pair<int, int>>& seed,
    const std::function<bool(int, int)>& filter) {
  std::vector<int> map(g.n, -1);
  std::vector<char> used(h.n, 0);
  std::vector<int> known;

  // Propagate products of known elements; false on conflict.
  auto close = [&](std::size_t from) -> bool {
    for (std::size_t i = from; i < known.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (auto [a, b] : {std::pair{known[i], known[j]}, std::pair{known[j], known[i]}}) {
          int p = g.mul(a, b);
          int q = h.mul(map[a], map[b]);
          if (map[p] == -1) {
            if (used[q])
              return false;
            map[p] = q;
            used[q] = 1;
            known.push_back(p);
          } else if (map[p] != q) {
            return false;
          }
        }
    return true;
  };

  auto assign = [&](int a, int b) -> bool {
    if (map[a] != -1)
      return map[a] == b;
    if (used[b])
      return false;
    map[a] = b;
    used[b] = 1;
    known.push_back(a);
    return close(known.size() - 1);
  };

  if (!assign(g.e, h.e))
    return std::nullopt;
  for (auto [a, b] : seed)
    if (!assign(a, b))
      return std::nullopt;

  // generators: first elements not yet reachable, in index order
  std::vector<int> gens;
  {
    std::vector<int> probe = map;
    std::vector<int> members = known;
    auto grow = [&](int x) {
      std::vector<int> stack{x};
      probe[x] = 0;
      members.push_back(x);
      while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i)
          for (int p : {g.mul(y, members[i]), g.mul(members[i], y)})
            if (probe[p] == -1) {
              probe[p] = 0;
              members.push_back(p);
              stack.push_back(p);
            }
      }
    };
    for (int x = 0; x < g.n; ++x)
      if (probe[x] == -1) {
        gens.push_back(x);
        grow(x);
      }
  }

  std::function<bool(std::size_t)> dfs = [&](std::size_t gi) -> bool {
    if (gi == gens.size())
      return static_cast<int>(known.size()) == g.n;
    int a = gens[gi];
    if (map[a] != -1)
      return dfs(gi + 1);  // forced by earlier closure
    int ord = g.element_order(a);
    for (int b = 0; b < h.n; ++b) {
      if (used[b] || h.element_order(b) != ord)
        continue;
      if (filter && !filter(a, b))
        continue;
      std::vector<int> save_map = map;
      std::vector<char> save_used = used;
      std::size_t save_known = known.size();
      if (assign(a, b) && dfs(gi + 1))
        return true;
      map = std::move(save_map);
      used = std::move(save_used);
      known.resize(save_known);
    }
    return false;
  };

  if (!dfs(0))
    return std::nullopt;
  return map;
}

}  // namespace detail

inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                        const FiniteGroup& h,
                                                        int bound = kIsoSearchBound) {
  if (g.n != h.n)
    return std::nullopt;
  if (g.n > bound)
    fail_limit("isomorphism search bound exceeded: order " + std::to_string(g.n) +
               " > " + std::to_string(bound));
  if (g.order_census() != h.order_census())
    return std::nullopt;
  return detail::isomorphism_search(g, h, {}, nullptr);
}

inline bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                          int bound = kIsoSearchBound) {
  if (g.n != h.n)
    return false;
  if (g.n > bound)
    fail_limit("isomorphism search bound exceeded: order " + std::to_string(g.n) +
               " > " + std::to_string(bound));
  if (g.order_census() != h.order_census())
    return false;
  const bool ga = g.is_abelian();
  if (ga != h.is_abelian())
    return false;
  if (ga)  // equal censuses determine an abelian group
    return invariant_factors_of_abelian(g) == invariant_factors_of_abelian(h);
  if (center(g).size() != center(h).size())
    return false;
  return detail::isomorphism_search(g, h, {}, nullptr).has_value();
}

// Structure of an abelian group as a FinAbGroup value (finite, so no
// free part).
inline FinAbGroup abelian_structure(const FiniteGroup& g) {
  FinAbGroup out;
  out.torsion = invariant_factors_of_abelian(g);
  return out;
}

}  // namespace fixedloci
