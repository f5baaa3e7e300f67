// Acceptance gate. Each criterion is exact (integer arithmetic, no
// tolerance) and prints exactly one PASS/FAIL line; stated runtime
// budgets are enforced as part of the criterion. Exit 0 iff all pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fixedloci/cli.hpp"
#include "fixedloci/corpus.hpp"

using namespace fixedloci;

namespace {

struct CriterionResult {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (detail.empty())
      detail = why;
  }
};

// ---- criterion 1: Smith decomposition vs determinant oracle ---------------

std::vector<IntMatrix> window_2x2() {
  std::vector<IntMatrix> out;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          if (a * d - b * c == 0)
            continue;
          IntMatrix m(2, 2);
          m.at(0, 0) = a;
          m.at(0, 1) = b;
          m.at(1, 0) = c;
          m.at(1, 1) = d;
          out.push_back(std::move(m));
        }
  return out;
}

std::vector<IntMatrix> seeded_3x3(int count) {
  std::mt19937 rng(990731);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<IntMatrix> out;
  while (static_cast<int>(out.size()) < count) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m.at(i, j) = entry(rng);
    if (determinant(m) != 0)
      out.push_back(std::move(m));
  }
  return out;
}

bool check_decomposition(const IntMatrix& a, CriterionResult& res) {
  SmithDecomposition s = smith_normal_form(a);
  if (multiply(multiply(s.U, a), s.V) != s.D) {
    res.fail("U*A*V != D for " + format_matrix(a));
    return false;
  }
  Int du = determinant(s.U), dv = determinant(s.V);
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) {
    res.fail("U or V not unimodular for " + format_matrix(a));
    return false;
  }
  if (!s.factors.is_valid()) {
    res.fail("factors are not a divisor chain for " + format_matrix(a));
    return false;
  }
  Int prod = 1;
  for (const Int& f : s.factors.moduli)
    prod *= f;
  Int det = determinant(a);
  if (prod != (det < 0 ? Int(-det) : det)) {
    res.fail("factor product != |det| for " + format_matrix(a));
    return false;
  }
  return true;
}

CriterionResult criterion_1(const std::vector<IntMatrix>& small,
                            const std::vector<IntMatrix>& big) {
  CriterionResult res;
  for (const IntMatrix& a : small)
    if (!check_decomposition(a, res))
      return res;
  for (const IntMatrix& a : big)
    if (!check_decomposition(a, res))
      return res;
  res.detail = std::to_string(small.size()) + " exhaustive 2x2, " + std::to_string(big.size()) +
               " seeded 3x3";
  return res;
}

// ---- criterion 2: kernel structure vs point-census oracle -----------------

CriterionResult criterion_2(const std::vector<IntMatrix>& small,
                            const std::vector<IntMatrix>& big) {
  CriterionResult res;
  long long checked = 0;
  auto check = [&](const IntMatrix& a) {
    Int det = determinant(a);
    if (det < 0)
      det = -det;
    if (det > 60)
      return true;
    FinAbGroup fast = torus_kernel(a);
    std::int64_t d = static_cast<std::int64_t>(det);
    for (std::int64_t k = 1; k <= 2; ++k) {
      if (torus_points_kernel_oracle(a, d * k) != fast) {
        res.fail("oracle at M=" + std::to_string(d * k) + " disagrees for " + format_matrix(a));
        return false;
      }
    }
    ++checked;
    return true;
  };
  for (const IntMatrix& a : small)
    if (!check(a))
      return res;
  for (const IntMatrix& a : big)
    if (!check(a))
      return res;
  res.detail = std::to_string(checked) + " matrices with |det| <= 60, point census at M and 2M";
  return res;
}

// ---- criterion 3: the verification corpus ----------------------------------

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f.good())
    throw std::runtime_error("cannot read " + path);
  return json::parse(f);
}

CriterionResult criterion_3(const std::vector<TheoremCase>& cases) {
  CriterionResult res;
  if (cases.size() < 30) {
    res.fail("corpus has only " + std::to_string(cases.size()) + " cases");
    return res;
  }
  // declared coverage: group families, kernel chains up to (2,4),
  // M in {2,3,4}, |U| <= 6, at least one nontrivial action
  std::set<std::string> names;
  std::set<int> ms;
  bool saw_24 = false, saw_nontrivial = false;
  for (const TheoremCase& tc : cases) {
    names.insert(tc.spec.G.name);
    ms.insert(tc.spec.M);
    if (tc.spec.r.moduli == std::vector<Int>{Int(2), Int(4)})
      saw_24 = true;
    if (tc.U_size > 6) {
      res.fail("case " + tc.name + " has |U| > 6");
      return res;
    }
    for (const auto& row : tc.action)
      for (std::size_t u = 0; u < row.size(); ++u)
        if (row[u] != static_cast<int>(u))
          saw_nontrivial = true;
  }
  for (const char* want : {"C2", "C4", "C6", "C2xC2", "C2xC4", "Q8", "D4"})
    if (!names.count(want)) {
      res.fail(std::string("corpus misses group family ") + want);
      return res;
    }
  if (ms != std::set<int>{2, 3, 4} || !saw_24 || !saw_nontrivial) {
    res.fail("corpus coverage (M values, r chain (2,4), nontrivial action) incomplete");
    return res;
  }

  int passed = 0, rejected = 0;
  for (const CaseOutcome& oc : run_corpus_cases(cases)) {
    if (!oc.ok) {
      res.fail("case " + oc.name + " finished '" + oc.status + "', annotated '" + oc.expect +
               "'");
      return res;
    }
    ++(oc.status == "pass" ? passed : rejected);
  }
  res.detail = std::to_string(cases.size()) + " cases: " + std::to_string(passed) +
               " verified, " + std::to_string(rejected) + " rejected control";
  return res;
}

// ---- criterion 4: the r-invariant vs the cyclic-cover census ---------------

DecoratedGraph chain_graph(const std::vector<long long>& degrees) {
  DecoratedGraph g;
  g.N = static_cast<int>(degrees.size());
  for (int v = 0; v <= static_cast<int>(degrees.size()); ++v)
    g.vertices.push_back({v, 0});
  for (int e = 0; e < static_cast<int>(degrees.size()); ++e)
    g.edges.push_back({e, e + 1, degrees[e]});
  return g;
}

CriterionResult criterion_4() {
  CriterionResult res;
  long long singles = 0, chains = 0;
  for (long long d = 1; d <= 12; ++d)
    for (long long delta = -12; delta <= 12; ++delta) {
      if (delta == 0)
        continue;
      DecoratedGraph g;
      g.N = 1;
      g.vertices = {{0, 0}, {1, 0}};
      g.edges = {{0, 1, d}};
      WeightVector w{{delta, 0}};  // edge difference is exactly delta
      long long r = edge_r(d, delta);
      if (graph_r(g, w) != r) {
        res.fail("graph_r != edge_r at d=" + std::to_string(d) +
                 ", delta=" + std::to_string(delta));
        return res;
      }
      if (oracle_graph_r(g, w, d * r) != r) {
        res.fail("census disagrees at d=" + std::to_string(d) +
                 ", delta=" + std::to_string(delta));
        return res;
      }
      ++singles;
    }

  // every 2- and 3-edge chain; the r data of a graph depends only on the
  // multiset of (degree, weight difference) pairs carried by its edges
  std::vector<std::vector<long long>> degree_lists;
  for (long long d1 = 1; d1 <= 4; ++d1)
    for (long long d2 = 1; d2 <= 4; ++d2) {
      degree_lists.push_back({d1, d2});
      for (long long d3 = 1; d3 <= 4; ++d3)
        degree_lists.push_back({d1, d2, d3});
    }
  for (const std::vector<long long>& degs : degree_lists) {
    const int e = static_cast<int>(degs.size());
    std::vector<long long> deltas(e, 1);
    for (;;) {
      DecoratedGraph g = chain_graph(degs);
      WeightVector w;
      w.lambda.assign(e + 1, 0);
      for (int i = 0; i < e; ++i)
        w.lambda[i + 1] = w.lambda[i] - deltas[i];  // difference across edge i is deltas[i]
      long long r = 1;
      for (int i = 0; i < e; ++i) {
        long long er = edge_r(degs[i], deltas[i]);
        r = std::lcm(r, er);
      }
      if (graph_r(g, w) != r) {
        res.fail("graph_r != lcm of edge_r on a chain");
        return res;
      }
      long long m = r;
      for (long long d : degs)
        m = std::lcm(m, d);
      if (oracle_graph_r(g, w, m) != r) {
        res.fail("census disagrees on a chain graph");
        return res;
      }
      ++chains;
      int j = e - 1;
      while (j >= 0 && deltas[j] == 4)
        deltas[j--] = 1;
      if (j < 0)
        break;
      ++deltas[j];
    }
  }
  res.detail = std::to_string(singles) + " single edges, " + std::to_string(chains) +
               " chain graphs";
  return res;
}

// ---- criterion 5: enumeration vs naive generate-filter-dedupe --------------

bool naive_iso(const DecoratedGraph& x, const DecoratedGraph& y) {
  if (x.vertices.size() != y.vertices.size() || x.edges.size() != y.edges.size() ||
      x.legs.size() != y.legs.size() || x.N != y.N)
    return false;
  const int v = static_cast<int>(x.vertices.size());
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::multiset<std::tuple<int, int, long long>> ye;
  for (const GraphEdge& e : y.edges)
    ye.insert({e.a, e.b, e.degree});
  do {
    bool ok = true;
    for (int i = 0; i < v && ok; ++i)
      ok = x.vertices[i].label == y.vertices[perm[i]].label &&
           x.vertices[i].genus == y.vertices[perm[i]].genus;
    for (std::size_t l = 0; l < x.legs.size() && ok; ++l)
      ok = perm[x.legs[l]] == y.legs[l];
    if (ok) {
      std::multiset<std::tuple<int, int, long long>> xe;
      for (const GraphEdge& e : x.edges) {
        int a = perm[e.a], b = perm[e.b];
        if (a > b)
          std::swap(a, b);
        xe.insert({a, b, e.degree});
      }
      if (xe == ye)
        return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<DecoratedGraph> naive_generate(int g, int n, int big_n, int d) {
  std::vector<DecoratedGraph> reps;
  for (int v = 1; v <= d + 1; ++v) {
    std::vector<GraphEdge> edges;
    std::function<void(int, int, long long, int)> rec_edges = [&](int lo_a, int lo_b,
                                                                  long long lo_d, int left) {
      if (left == 0) {
        std::vector<int> reach(v, 0);
        reach[0] = 1;
        for (bool grew = true; grew;) {
          grew = false;
          for (const GraphEdge& e : edges)
            if (reach[e.a] != reach[e.b]) {
              reach[e.a] = reach[e.b] = 1;
              grew = true;
            }
        }
        for (int i = 0; i < v; ++i)
          if (!reach[i])
            return;
        const int b1 = static_cast<int>(edges.size()) - v + 1;
        if (b1 < 0 || g - b1 < 0)
          return;
        std::vector<int> label(v);
        std::function<void(int)> rec_label = [&](int i) {
          if (i == v) {
            for (const GraphEdge& e : edges)
              if (label[e.a] == label[e.b])
                return;
            std::vector<int> genus(v, 0);
            std::function<void(int, int)> rec_genus = [&](int i2, int rem) {
              if (i2 == v) {
                if (rem != 0)
                  return;
                std::vector<int> legs(n);
                std::function<void(int)> rec_legs = [&](int li) {
                  if (li == n) {
                    DecoratedGraph cand;
                    cand.N = big_n;
                    cand.vertices.resize(v);
                    for (int z = 0; z < v; ++z)
                      cand.vertices[z] = {label[z], genus[z]};
                    cand.edges = edges;
                    cand.legs = legs;
                    for (const DecoratedGraph& r : reps)
                      if (naive_iso(cand, r))
                        return;
                    reps.push_back(cand);
                    return;
                  }
                  for (int z = 0; z < v; ++z) {
                    legs[li] = z;
                    rec_legs(li + 1);
                  }
                };
                rec_legs(0);
                return;
              }
              for (int take = 0; take <= rem; ++take) {
                genus[i2] = take;
                rec_genus(i2 + 1, rem - take);
              }
            };
            rec_genus(0, g - b1);
            return;
          }
          for (int lb = 0; lb <= big_n; ++lb) {
            label[i] = lb;
            rec_label(i + 1);
          }
        };
        rec_label(0);
        return;
      }
      for (int a = lo_a; a < v; ++a)
        for (int b = (a == lo_a ? lo_b : a + 1); b < v; ++b) {
          if (b <= a)
            continue;
          long long dmin = (a == lo_a && b == lo_b) ? lo_d : 1;
          for (long long deg = dmin; deg <= left; ++deg) {
            edges.push_back({a, b, deg});
            rec_edges(a, b, deg, left - static_cast<int>(deg));
            edges.pop_back();
          }
        }
    };
    rec_edges(0, 1, 1, d);
  }
  return reps;
}

CriterionResult criterion_5() {
  CriterionResult res;
  if (enumerate_graphs(0, 0, 1, 1).size() != 1 || enumerate_graphs(0, 0, 1, 2).size() != 3) {
    res.fail("pinned counts (0,0,1,1)=1, (0,0,1,2)=3 violated");
    return res;
  }
  long long total = 0;
  for (int g = 0; g <= 1; ++g)
    for (int n = 0; n <= 1; ++n)
      for (int big_n = 1; big_n <= 2; ++big_n)
        for (int d = 1; d <= 3; ++d) {
          std::vector<DecoratedGraph> fast = enumerate_graphs(g, n, big_n, d);
          std::vector<DecoratedGraph> naive = naive_generate(g, n, big_n, d);
          const std::string cell = "(" + std::to_string(g) + "," + std::to_string(n) + "," +
                                   std::to_string(big_n) + "," + std::to_string(d) + ")";
          if (fast.size() != naive.size()) {
            res.fail("count mismatch at " + cell + ": " + std::to_string(fast.size()) +
                     " vs naive " + std::to_string(naive.size()));
            return res;
          }
          std::multiset<std::vector<long long>> fast_forms, naive_forms;
          for (const DecoratedGraph& r : fast)
            fast_forms.insert(canonical_encoding(r));
          for (const DecoratedGraph& r : naive)
            naive_forms.insert(canonical_encoding(r));
          if (fast_forms != naive_forms) {
            res.fail("canonical-form multiset mismatch at " + cell);
            return res;
          }
          if (fast_forms.size() != std::set<std::vector<long long>>(fast_forms.begin(),
                                                                    fast_forms.end())
                                       .size()) {
            res.fail("duplicate canonical form at " + cell);
            return res;
          }
          total += static_cast<long long>(fast.size());
        }
  res.detail = "24 grid cells, " + std::to_string(total) + " isomorphism classes";
  return res;
}

// ---- criterion 6: edge stabilizer vs exhaustive subgroup census ------------

CriterionResult criterion_6() {
  CriterionResult res;
  long long grid = 0;
  for (long long d = 1; d <= 12; ++d)
    for (long long delta = -12; delta <= 12; ++delta) {
      if (delta == 0)
        continue;
      const long long ad = delta < 0 ? -delta : delta;
      const long long h = std::gcd(d, ad);
      EdgeStabilizer st = edge_stabilizer(d, delta);
      if (st.component_count * st.degree_to_target != d ||
          st.component_count != h || st.degree_to_target != d / h) {
        res.fail("closed form violated at d=" + std::to_string(d) +
                 ", delta=" + std::to_string(delta));
        return res;
      }
      // census of {(a,b) in (Z/M)^2 : d a = delta b} at M = 2 d |delta|
      const long long m = 2 * d * ad;
      long long count = 0, max_order = 1;
      std::set<long long> image;
      for (long long a = 0; a < m; ++a)
        for (long long b = 0; b < m; ++b) {
          if ((d * a - delta * b) % m != 0)
            continue;
          ++count;
          long long ord = std::lcm(m / std::gcd(m, a), m / std::gcd(m, b));
          max_order = std::max(max_order, ord);
          image.insert(b);
        }
      // subgroup of rank <= 2 with |P| = e1 e2 and exponent e2
      const long long e2 = max_order;
      const long long e1 = count / e2;
      if (e1 * e2 != count || e1 != h || e2 != m) {
        res.fail("census structure (" + std::to_string(e1) + "," + std::to_string(e2) +
                 ") != (" + std::to_string(h) + "," + std::to_string(m) + ") at d=" +
                 std::to_string(d) + ", delta=" + std::to_string(delta));
        return res;
      }
      // projection to the target coordinate has index = covering degree
      if (static_cast<long long>(image.size()) * st.degree_to_target != m) {
        res.fail("projection index != degree_to_target at d=" + std::to_string(d) +
                 ", delta=" + std::to_string(delta));
        return res;
      }
      ++grid;
    }
  res.detail = std::to_string(grid) + " (d, delta) pairs, census up to M=288";
  return res;
}

// ---- criterion 7: the ledger group on Pic = Z -------------------------------

CriterionResult criterion_7() {
  CriterionResult res;
  PicModel line;
  line.pic.free_rank = 1;
  for (Int n = 0; n <= 24; ++n)
    for (Int r = 1; r <= 12; ++r)
      if (is_trivial(kummer_class(line, {n}, r)) != (n % r == 0)) {
        res.fail("triviality differs from divisibility at n=" + n.str() + ", r=" + r.str());
        return res;
      }
  for (int r = 1; r <= 12; ++r) {
    // full Cayley table of the classes under contraction
    FiniteGroup cayley;
    cayley.n = r;
    cayley.e = 0;
    cayley.table.resize(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        GerbeClass sum = add_classes(kummer_class(line, {i}, r), kummer_class(line, {j}, r));
        cayley.table[static_cast<std::size_t>(i) * r + j] =
            static_cast<std::uint16_t>(static_cast<long long>(sum.value[0]));
      }
    cayley.validate();
    DivisorChain census = invariant_factors_of_abelian(cayley);
    // independent route: Pic/r Pic as the cokernel of multiplication by r
    IntMatrix mult_r(1, 1);
    mult_r.at(0, 0) = r;
    FinAbGroup coker = coker_structure(mult_r);
    if (coker.free_rank != 0 || census.nontrivial() != coker.torsion.moduli) {
      res.fail("class group at r=" + std::to_string(r) + " differs from the cokernel");
      return res;
    }
  }
  res.detail = "triviality grid 25x12, Cayley tables vs cokernel for r <= 12";
  return res;
}

// ---- criterion 8: byte-identical reruns -------------------------------------

std::string run_to_string(const RunConfig& cfg, int& code) {
  std::ostringstream out, err;
  code = run(cfg, out, err);
  return out.str() + "\x1f" + err.str();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

CriterionResult criterion_8(const std::string& corpus_path) {
  CriterionResult res;

  std::vector<std::pair<std::string, RunConfig>> runs;
  auto add = [&](const std::string& name, RunConfig cfg) { runs.push_back({name, cfg}); };
  for (const std::string& fmt : {"json", "csv", "md"}) {
    RunConfig snf;
    snf.command = "snf";
    snf.matrix = "6,4,-2;0,3,7;1,1,1";
    snf.format = fmt;
    add("snf/" + fmt, snf);
    RunConfig vt;
    vt.command = "verify-theorem";
    vt.corpus_path = corpus_path;
    vt.format = fmt;
    add("verify-theorem/" + fmt, vt);
  }
  RunConfig tk;
  tk.command = "torus-kernel";
  tk.matrix = "2,0;0,4";
  add("torus-kernel", tk);
  RunConfig ext;
  ext.command = "extension";
  ext.group = "Q8";
  ext.r_chain = {2};
  ext.iota = {0, 1};
  ext.M = 2;
  add("extension", ext);
  RunConfig gp;
  gp.command = "gp-graphs";
  gp.g = 1;
  gp.n = 1;
  gp.N = 2;
  gp.d = 2;
  gp.weights = "0,2,5";
  add("gp-graphs", gp);
  RunConfig ger;
  ger.command = "gerbe";
  ger.gerbe_action = "kummer";
  ger.pic = "Z x Z/2";
  ger.L = "5,1";
  ger.r = 4;
  ger.has_twist = true;
  ger.twist_w = 2;
  add("gerbe", ger);

  int pairs = 0;
  for (const auto& [name, cfg] : runs) {
    int c1 = 0, c2 = 0;
    std::string o1 = run_to_string(cfg, c1);
    std::string o2 = run_to_string(cfg, c2);
    if (c1 != c2 || o1 != o2) {
      res.fail("in-process rerun of " + name + " differs");
      return res;
    }
    ++pairs;
  }

  // the installed binary, byte-compared across reruns
  const std::string bin = FIXEDLOCI_BIN_PATH;
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "fixedloci_acceptance";
  std::filesystem::create_directories(dir);
  int spawn_id = 0;
  auto spawn = [&](const std::string& args, int& code) -> std::string {
    std::filesystem::path out = dir / ("out" + std::to_string(spawn_id++));
    int rc = std::system((args + " > '" + out.string() + "' 2>&1").c_str());
    code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return slurp(out);
  };
  std::vector<std::pair<std::string, std::string>> cmds = {
      {"snf", "'" + bin + "' snf --matrix '6,4,-2;0,3,7;1,1,1'"},
      {"snf/csv", "'" + bin + "' snf --matrix '2,1;0,3' --format csv"},
      {"torus-kernel", "'" + bin + "' torus-kernel --matrix '2,0;0,4'"},
      {"extension", "'" + bin + "' extension --group Q8 --r 2 --iota 0,1 --M 2"},
      {"verify-theorem", "'" + bin + "' verify-theorem --corpus '" + corpus_path + "'"},
      {"verify-theorem/md",
       "'" + bin + "' verify-theorem --corpus '" + corpus_path + "' --format md"},
      {"gp-graphs", "'" + bin + "' gp-graphs --g 1 --n 1 --N 2 --d 2 --weights 0,2,5"},
      {"gerbe", "'" + bin + "' gerbe kummer --pic 'Z x Z/2' --L 5,1 --r 4 --twist 2"},
  };
  for (const auto& [name, cmd] : cmds) {
    int c1 = 0, c2 = 0;
    std::string o1 = spawn(cmd, c1);
    std::string o2 = spawn(cmd, c2);
    if (c1 != 0 || c2 != 0) {
      res.fail("binary run of " + name + " exited " + std::to_string(c1) + "/" +
               std::to_string(c2));
      return res;
    }
    if (o1 != o2) {
      res.fail("binary rerun of " + name + " differs");
      return res;
    }
    ++pairs;
  }

  // cap through the environment equals cap through the flag
  int ce1 = 0, ce2 = 0, cf = 0;
  std::string env1 = spawn("FIXEDLOCI_CAP=1000 '" + bin + "' gp-graphs --g 0 --n 0 --N 1 --d 3",
                           ce1);
  std::string env2 = spawn("FIXEDLOCI_CAP=1000 '" + bin + "' gp-graphs --g 0 --n 0 --N 1 --d 3",
                           ce2);
  std::string flag = spawn("'" + bin + "' gp-graphs --g 0 --n 0 --N 1 --d 3 --cap 1000", cf);
  if (ce1 != 0 || ce2 != 0 || cf != 0 || env1 != env2 || env1 != flag) {
    res.fail("environment cap and flag cap disagree");
    return res;
  }
  ++pairs;

  res.detail = std::to_string(pairs) + " command reruns byte-identical";
  return res;
}

}  // namespace

int main() {
  const std::string corpus_path = std::string(FIXEDLOCI_DATA_DIR) + "/theorem_corpus.json";

  struct Row {
    std::string label;
    double budget = 0;  // seconds; 0 = no stated budget
    std::function<CriterionResult()> fn;
  };

  std::vector<IntMatrix> small, big;
  std::vector<TheoremCase> cases;
  std::vector<Row> rows = {
      {"smith decomposition identities", 60,
       [&] {
         small = window_2x2();
         big = seeded_3x3(10000);
         return criterion_1(small, big);
       }},
      {"torus kernel vs point census", 120, [&] { return criterion_2(small, big); }},
      {"verification corpus", 300,
       [&] {
         cases = corpus_from_json(load_json_file(corpus_path));
         return criterion_3(cases);
       }},
      {"r-invariant vs cyclic covers", 120, [&] { return criterion_4(); }},
      {"graph enumeration vs naive oracle", 120, [&] { return criterion_5(); }},
      {"edge stabilizer census", 0, [&] { return criterion_6(); }},
      {"gerbe ledger on Pic = Z", 10, [&] { return criterion_7(); }},
      {"CLI determinism", 0, [&] { return criterion_8(corpus_path); }},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = rows[i].fn();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.ok && rows[i].budget > 0 && secs >= rows[i].budget)
      r.fail("runtime " + std::to_string(secs) + "s exceeds the stated budget");
    all_ok = all_ok && r.ok;
    std::ostringstream line;
    line << (r.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << rows[i].label;
    line << "  [" << std::fixed;
    line.precision(2);
    line << secs << "s";
    if (rows[i].budget > 0)
      line << " / " << static_cast<int>(rows[i].budget) << "s";
    line << "]  " << r.detail;
    std::cout << line.str() << "\n";
  }
  std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
            << "\n";
  return all_ok ? 0 : 1;
}
