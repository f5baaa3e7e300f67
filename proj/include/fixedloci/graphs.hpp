// Decorated graphs indexing torus-fixed components of stable-map spaces,
// with their r-invariants, automorphisms, and moduli factors.
//
// A graph carries vertex labels (the fixed point hit), vertex genera,
// edge degrees (parallel edges allowed, self-loops not), and numbered
// legs. Canonical form, documented in detail at canonical_encoding, is
// the lexicographically minimal flat encoding over all vertex orderings
// that sort vertices by their invariant class key; enumeration returns
// exactly one representative per isomorphism class, sorted by that
// encoding.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fixedloci/errors.hpp"
#include "fixedloci/int_matrix.hpp"
#include "fixedloci/smith.hpp"

namespace fixedloci {

constexpr long long kGraphEnumCap = 2000000;  // candidate structures per call

struct WeightVector {
  std::vector<long long> lambda;  // one weight per label 0..N
};

inline void validate_weights(const WeightVector& w, int n_labels) {
  require_input(static_cast<int>(w.lambda.size()) == n_labels,
                "weights: need " + std::to_string(n_labels) + " entries, got " +
                    std::to_string(w.lambda.size()));
  for (std::size_t i = 0; i < w.lambda.size(); ++i)
    for (std::size_t j = i + 1; j < w.lambda.size(); ++j)
      require_input(w.lambda[i] != w.lambda[j], "weights not distinct");
}

struct GraphVertex {
  int label = 0;
  int genus = 0;
};

struct GraphEdge {
  int a = 0;  // endpoints, a < b
  int b = 1;
  long long degree = 1;
};

struct DecoratedGraph {
  int N = 1;  // labels range over 0..N
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<int> legs;  // legs[i] = vertex carrying leg i
};

inline void validate_graph(const DecoratedGraph& g) {
  const int v = static_cast<int>(g.vertices.size());
  require_input(v >= 1, "graph: needs at least one vertex");
  require_input(g.N >= 1, "graph: label bound N must be at least 1");
  for (const GraphVertex& vx : g.vertices) {
    require_input(vx.label >= 0 && vx.label <= g.N, "graph: vertex label out of range");
    require_input(vx.genus >= 0, "graph: vertex genus must be nonnegative");
  }
  std::vector<int> root(v);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x)
      x = root[x] = root[root[x]];
    return x;
  };
  for (const GraphEdge& e : g.edges) {
    require_input(e.a >= 0 && e.b < v && e.a < e.b,
                  "graph: edge endpoints must satisfy 0 <= a < b (self-loops are forbidden)");
    require_input(e.degree >= 1, "graph: edge degree must be positive");
    require_input(g.vertices[e.a].label != g.vertices[e.b].label,
                  "graph: adjacent vertices must carry distinct labels");
    root[find(e.a)] = find(e.b);
  }
  for (int x = 0; x < v; ++x)
    require_input(find(x) == find(0), "graph: must be connected");
  for (int leg : g.legs)
    require_input(leg >= 0 && leg < v, "graph: leg attached to a missing vertex");
}

inline long long total_degree(const DecoratedGraph& g) {
  long long d = 0;
  for (const GraphEdge& e : g.edges)
    d += e.degree;
  return d;
}

inline int first_betti(const DecoratedGraph& g) {
  return static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 1;
}

inline int total_genus(const DecoratedGraph& g) {
  int sum = first_betti(g);
  for (const GraphVertex& v : g.vertices)
    sum += v.genus;
  return sum;
}

namespace detail {

// Iso-invariant vertex class key: (label, genus, sorted incident-degree
// multiset, sorted attached-leg numbers).
inline std::vector<long long> vertex_class_key(const DecoratedGraph& g, int v) {
  std::vector<long long> key{g.vertices[v].label, g.vertices[v].genus};
  std::vector<long long> degs;
  for (const GraphEdge& e : g.edges)
    if (e.a == v || e.b == v)
      degs.push_back(e.degree);
  std::sort(degs.begin(), degs.end());
  key.push_back(static_cast<long long>(degs.size()));
  key.insert(key.end(), degs.begin(), degs.end());
  for (std::size_t i = 0; i < g.legs.size(); ++i)
    if (g.legs[i] == v)
      key.push_back(static_cast<long long>(i));
  return key;
}

// Flat encoding of the graph under old->new vertex renumbering `pos`:
//   [V, E, n, N,   label_0, genus_0, ..., label_{V-1}, genus_{V-1},
//    sorted edge triples (min,max,degree) flattened,
//    new index of leg 0, ..., new index of leg n-1]
inline std::vector<long long> encode_under(const DecoratedGraph& g, const std::vector<int>& pos) {
  const int v = static_cast<int>(g.vertices.size());
  std::vector<long long> enc{v, static_cast<long long>(g.edges.size()),
                             static_cast<long long>(g.legs.size()), g.N};
  std::vector<int> inv(v);
  for (int old = 0; old < v; ++old)
    inv[pos[old]] = old;
  for (int nw = 0; nw < v; ++nw) {
    enc.push_back(g.vertices[inv[nw]].label);
    enc.push_back(g.vertices[inv[nw]].genus);
  }
  std::vector<std::array<long long, 3>> tri;
  for (const GraphEdge& e : g.edges) {
    long long x = pos[e.a], y = pos[e.b];
    if (x > y)
      std::swap(x, y);
    tri.push_back({x, y, e.degree});
  }
  std::sort(tri.begin(), tri.end());
  for (const auto& t : tri) {
    enc.push_back(t[0]);
    enc.push_back(t[1]);
    enc.push_back(t[2]);
  }
  for (int leg : g.legs)
    enc.push_back(pos[leg]);
  return enc;
}

// Visit every vertex ordering that lists class-key blocks in key order,
// permuting freely inside each block. f receives old->new positions.
template <typename F>
void for_each_block_ordering(const DecoratedGraph& g, F&& f) {
  const int v = static_cast<int>(g.vertices.size());
  std::vector<std::pair<std::vector<long long>, int>> keyed;
  for (int x = 0; x < v; ++x)
    keyed.push_back({vertex_class_key(g, x), x});
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::pair<int, int>> blocks;  // [begin, end) in keyed
  for (int i = 0; i < v;) {
    int j = i;
    while (j < v && keyed[j].first == keyed[i].first)
      ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<int> pos(v);
  std::function<void(std::size_t)> rec = [&](std::size_t bi) {
    if (bi == blocks.size()) {
      f(pos);
      return;
    }
    auto [lo, hi] = blocks[bi];
    std::vector<int> members;
    for (int i = lo; i < hi; ++i)
      members.push_back(keyed[i].second);
    std::sort(members.begin(), members.end());
    do {
      for (int i = 0; i < hi - lo; ++i)
        pos[members[i]] = lo + i;
      rec(bi + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(0);
}

}  // namespace detail

// Canonical form: lexicographically minimal detail::encode_under value
// over all class-compatible vertex orderings. Equal encodings decide
// isomorphism (isomorphisms preserve labels, genera, degrees, and leg
// numbering, hence class keys).
inline std::vector<long long> canonical_encoding(const DecoratedGraph& g) {
  validate_graph(g);
  std::optional<std::vector<long long>> best;
  detail::for_each_block_ordering(g, [&](const std::vector<int>& pos) {
    std::vector<long long> enc = detail::encode_under(g, pos);
    if (!best || enc < *best)
      best = std::move(enc);
  });
  return *best;
}

// The graph renumbered into its canonical ordering.
inline DecoratedGraph canonical_form(const DecoratedGraph& g) {
  validate_graph(g);
  std::optional<std::vector<long long>> best;
  std::vector<int> best_pos;
  detail::for_each_block_ordering(g, [&](const std::vector<int>& pos) {
    std::vector<long long> enc = detail::encode_under(g, pos);
    if (!best || enc < *best) {
      best = std::move(enc);
      best_pos = pos;
    }
  });
  const int v = static_cast<int>(g.vertices.size());
  DecoratedGraph out;
  out.N = g.N;
  out.vertices.resize(v);
  for (int old = 0; old < v; ++old)
    out.vertices[best_pos[old]] = g.vertices[old];
  for (const GraphEdge& e : g.edges) {
    GraphEdge ne;
    ne.a = std::min(best_pos[e.a], best_pos[e.b]);
    ne.b = std::max(best_pos[e.a], best_pos[e.b]);
    ne.degree = e.degree;
    out.edges.push_back(ne);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.a, x.b, x.degree) < std::tie(y.a, y.b, y.degree);
  });
  for (int leg : g.legs)
    out.legs.push_back(best_pos[leg]);
  return out;
}

// Order of the decoration-preserving automorphism group: vertex
// permutations fixing labels, genera, the edge multiset, and every
// numbered leg, times free permutations of identical parallel edges.
inline long long automorphism_count(const DecoratedGraph& g) {
  validate_graph(g);
  const int v = static_cast<int>(g.vertices.size());
  std::vector<std::array<long long, 3>> base;
  for (const GraphEdge& e : g.edges)
    base.push_back({e.a, e.b, e.degree});
  std::sort(base.begin(), base.end());

  // A vertex permutation is admissible iff it maps each vertex within
  // its class (class keys are iso-invariants), fixes every leg vertex
  // pointwise, and preserves the edge multiset.
  std::vector<std::vector<long long>> keys;
  for (int x = 0; x < v; ++x)
    keys.push_back(detail::vertex_class_key(g, x));
  std::vector<int> perm(v, -1);
  std::vector<char> used(v, 0);
  for (int leg : g.legs)
    if (perm[leg] == -1) {
      perm[leg] = leg;  // numbered legs pin their vertices
      used[leg] = 1;
    }
  long long vertex_perms = 0;
  std::function<void(int)> rec = [&](int x) {
    while (x < v && perm[x] != -1)
      ++x;
    if (x >= v) {
      std::vector<std::array<long long, 3>> mapped;
      for (const GraphEdge& e : g.edges) {
        long long p = perm[e.a], q = perm[e.b];
        if (p > q)
          std::swap(p, q);
        mapped.push_back({p, q, e.degree});
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped == base)
        ++vertex_perms;
      return;
    }
    for (int y = 0; y < v; ++y) {
      if (used[y] || keys[x] != keys[y])
        continue;
      perm[x] = y;
      used[y] = 1;
      rec(x + 1);
      perm[x] = -1;
      used[y] = 0;
    }
  };
  rec(0);

  long long parallel_factor = 1;
  for (std::size_t i = 0; i < base.size();) {
    std::size_t j = i;
    while (j < base.size() && base[j] == base[i])
      ++j;
    for (std::size_t m = 2; m <= j - i; ++m)
      parallel_factor *= static_cast<long long>(m);
    i = j;
  }
  return vertex_perms * parallel_factor;
}

inline Int deck_group_order(const DecoratedGraph& g) {
  Int d = 1;
  for (const GraphEdge& e : g.edges)
    d *= e.degree;
  return d;
}

// |A| for the split extension of Aut by the deck group of the edge covers.
inline Int component_group_order(const DecoratedGraph& g) {
  return Int(automorphism_count(g)) * deck_group_order(g);
}

// ---- the r-invariant -----------------------------------------------------

inline long long edge_r(long long d, long long delta) {
  require_input(d >= 1, "edge r: degree must be positive");
  require_input(delta != 0, "weights not distinct");
  return d / std::gcd(d, delta < 0 ? -delta : delta);
}

inline long long graph_r(const DecoratedGraph& g, const WeightVector& w) {
  validate_graph(g);
  validate_weights(w, g.N + 1);
  long long r = 1;
  for (const GraphEdge& e : g.edges) {
    long long delta = w.lambda[g.vertices[e.a].label] - w.lambda[g.vertices[e.b].label];
    long long er = edge_r(e.degree, delta);
    r = r / std::gcd(r, er) * er;
  }
  return r;
}

struct EdgeStabilizer {
  long long component_count = 1;
  long long degree_to_target = 1;
};

// Structure of {(s,t) : s^d = t^delta} inside a 2-torus, computed from
// the character lattice: the invariant factor of the 1x2 matrix (d,
// -delta) counts components, and the primitive kernel generator's
// second coordinate is the covering degree onto the target.
inline EdgeStabilizer edge_stabilizer(long long d, long long delta) {
  require_input(d >= 1, "edge stabilizer: degree must be positive");
  require_input(delta != 0, "weights not distinct");
  IntMatrix a(1, 2);
  a.at(0, 0) = d;
  a.at(0, 1) = -delta;
  SmithDecomposition s = smith_normal_form(a);
  EdgeStabilizer out;
  out.component_count = static_cast<long long>(s.factors.moduli.at(0));
  // kernel of (d, -delta): second column of V (A*V = U^{-1}*D has zero
  // second column), a primitive vector +-(delta/h, d/h)
  Int gen_second = s.V.at(1, 1);
  if (gen_second < 0)
    gen_second = -gen_second;
  out.degree_to_target = static_cast<long long>(gen_second);
  if (a.at(0, 0) * s.V.at(0, 1) + a.at(0, 1) * s.V.at(1, 1) != 0)
    throw std::logic_error("edge stabilizer: kernel column is not in the kernel");
  return out;
}

// Brute-force oracle for the r-invariant over the order-M cyclic model:
// the smallest k >= 1 such that for every t there are edge parameters
// s_e with d_e * s_e = k * Delta_e * t (mod M).
inline long long oracle_graph_r(const DecoratedGraph& g, const WeightVector& w, long long big_m) {
  validate_graph(g);
  validate_weights(w, g.N + 1);
  require_input(big_m >= 1, "oracle: M must be positive");
  for (const GraphEdge& e : g.edges)
    require_input(big_m % e.degree == 0, "oracle: M must be a common multiple of the degrees");
  require_input(big_m % graph_r(g, w) == 0,
                "oracle: M must be a multiple of the claimed r-invariant");
  std::vector<long long> deltas, gcds;
  for (const GraphEdge& e : g.edges) {
    long long delta = w.lambda[g.vertices[e.a].label] - w.lambda[g.vertices[e.b].label];
    deltas.push_back(((delta % big_m) + big_m) % big_m);
    gcds.push_back(std::gcd(e.degree, big_m));
  }
  for (long long k = 1; k <= big_m; ++k) {
    bool all_t = true;
    for (long long t = 0; t < big_m && all_t; ++t)
      for (std::size_t e = 0; e < deltas.size(); ++e) {
        long long c = (k % big_m) * deltas[e] % big_m * t % big_m;
        if (c % gcds[e] != 0) {
          all_t = false;
          break;
        }
      }
    if (all_t)
      return k;
  }
  throw std::logic_error("oracle: no exponent up to M trivializes the action");
}

// ---- component descriptors -----------------------------------------------

struct FixedLocusReport {
  DecoratedGraph graph;
  std::optional<long long> r;  // present iff weights were supplied
  long long aut_order = 1;
  Int deck_order = 1;
  Int A_order = 1;
  std::vector<std::pair<int, int>> moduli_factors;  // (genus, val+legs), stable vertices
  std::vector<int> unstable_vertices;
};

inline FixedLocusReport component_descriptor(const DecoratedGraph& g,
                                             const std::optional<WeightVector>& w = std::nullopt) {
  validate_graph(g);
  FixedLocusReport rep;
  rep.graph = g;
  if (w)
    rep.r = graph_r(g, *w);
  rep.aut_order = automorphism_count(g);
  rep.deck_order = deck_group_order(g);
  rep.A_order = Int(rep.aut_order) * rep.deck_order;
  const int v = static_cast<int>(g.vertices.size());
  std::vector<int> val(v, 0);
  for (const GraphEdge& e : g.edges) {
    ++val[e.a];
    ++val[e.b];
  }
  for (int leg : g.legs)
    ++val[leg];
  for (int x = 0; x < v; ++x) {
    if (2 * g.vertices[x].genus - 2 + val[x] > 0)
      rep.moduli_factors.push_back({g.vertices[x].genus, val[x]});
    else
      rep.unstable_vertices.push_back(x);
  }
  return rep;
}

// ---- enumeration -----------------------------------------------------------

// All decorated graphs with total genus g, n numbered legs, labels in
// 0..N, and total degree d, one canonical representative per
// isomorphism class, sorted by canonical encoding.
inline std::vector<DecoratedGraph> enumerate_graphs(int g, int n, int big_n, int d,
                                                    long long cap = kGraphEnumCap) {
  require_input(g >= 0 && n >= 0, "enumerate_graphs: g and n must be nonnegative");
  require_input(big_n >= 1, "enumerate_graphs: N must be at least 1");
  require_input(d >= 1, "enumerate_graphs: d must be at least 1");
  long long budget = cap;
  auto spend = [&budget](long long amount) {
    budget -= amount;
    if (budget < 0)
      fail_limit("graph enumeration: resource cap exceeded");
  };

  std::map<std::vector<long long>, DecoratedGraph> found;

  for (int v = 2; v <= d + 1; ++v) {
    const int max_edges = std::min(d, v - 1 + g);
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        pairs.push_back({a, b});

    // choose, pair by pair, a non-increasing degree list of parallel edges
    std::vector<GraphEdge> edges;
    std::function<void(std::size_t, int, int)> choose_edges = [&](std::size_t pi, int left,
                                                                  int used_edges) {
      spend(1);
      if (pi == pairs.size()) {
        if (left != 0)
          return;
        const int e = used_edges;
        if (e < v - 1 || e > max_edges)
          return;
        // connectivity
        std::vector<int> root(v);
        std::iota(root.begin(), root.end(), 0);
        std::function<int(int)> find = [&](int x) {
          while (root[x] != x)
            x = root[x] = root[root[x]];
          return x;
        };
        for (const GraphEdge& ed : edges)
          root[find(ed.a)] = find(ed.b);
        for (int x = 0; x < v; ++x)
          if (find(x) != find(0))
            return;
        const int b1 = e - v + 1;
        const int genus_left = g - b1;
        if (genus_left < 0)
          return;

        // labels: adjacent distinct
        std::vector<std::vector<int>> adj(v);
        for (const GraphEdge& ed : edges) {
          adj[ed.a].push_back(ed.b);
          adj[ed.b].push_back(ed.a);
        }
        std::vector<int> label(v, -1);
        std::function<void(int)> choose_labels = [&](int x) {
          if (x == v) {
            // genus distributions: compositions of genus_left over v slots
            std::vector<int> genus(v, 0);
            std::function<void(int, int)> choose_genus = [&](int y, int rem) {
              if (y == v - 1) {
                genus[y] = rem;
                // legs
                std::vector<int> legs(n, 0);
                std::function<void(int)> choose_legs = [&](int li) {
                  if (li == n) {
                    spend(1);
                    DecoratedGraph cand;
                    cand.N = big_n;
                    cand.vertices.resize(v);
                    for (int z = 0; z < v; ++z)
                      cand.vertices[z] = {label[z], genus[z]};
                    cand.edges = edges;
                    cand.legs = legs;
                    std::vector<long long> enc = canonical_encoding(cand);
                    if (!found.count(enc))
                      found.emplace(std::move(enc), canonical_form(cand));
                    return;
                  }
                  for (int z = 0; z < v; ++z) {
                    legs[li] = z;
                    choose_legs(li + 1);
                  }
                };
                choose_legs(0);
                return;
              }
              for (int take = 0; take <= rem; ++take) {
                genus[y] = take;
                choose_genus(y + 1, rem - take);
              }
            };
            choose_genus(0, genus_left);
            return;
          }
          for (int lb = 0; lb <= big_n; ++lb) {
            bool ok = true;
            for (int nb : adj[x])
              if (nb < x && label[nb] == lb) {
                ok = false;
                break;
              }
            label[x] = lb;
            if (ok)
              choose_labels(x + 1);
          }
          label[x] = -1;
        };
        choose_labels(0);
        return;
      }
      // skip this pair entirely
      choose_edges(pi + 1, left, used_edges);
      // or place parallel edges with non-increasing degrees
      std::function<void(int, int, int)> add_parallel = [&](int maxdeg, int rem, int cnt) {
        for (int deg = std::min(maxdeg, rem); deg >= 1; --deg) {
          edges.push_back({pairs[pi].first, pairs[pi].second, deg});
          if (cnt + 1 <= max_edges)
            choose_edges(pi + 1, rem - deg, cnt + 1);
          if (cnt + 1 < max_edges)
            add_parallel(deg, rem - deg, cnt + 1);
          edges.pop_back();
        }
      };
      if (used_edges < max_edges)
        add_parallel(left, left, used_edges);
    };
    choose_edges(0, d, 0);
  }

  std::vector<DecoratedGraph> out;
  for (auto& [enc, gr] : found) {
    (void)enc;
    out.push_back(std::move(gr));
  }
  return out;
}

}  // namespace fixedloci
