// Finitely generated abelian groups and kernels of torus isogenies.
//
// FinAbGroup is the canonical form Z^k x Z/d_1 x ... x Z/d_t with
// 1 < d_1 | d_2 | ... | d_t. torus_kernel(A) reads the kernel of the
// homomorphism of tori induced by a nonsingular integer matrix A off its
// Smith normal form. torus_points_kernel_oracle recovers the same group
// by brute force, counting points of the kernel inside the M-torsion of
// the torus; the two routes share no code past the matrix type and are
// checked against each other in the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fixedloci/errors.hpp"
#include "fixedloci/int_matrix.hpp"
#include "fixedloci/smith.hpp"

namespace fixedloci {

struct FinAbGroup {
  std::size_t free_rank = 0;
  DivisorChain torsion;  // canonical: every entry > 1, each divides the next

  bool is_valid() const {
    if (!torsion.is_valid())
      return false;
    for (const Int& m : torsion.moduli)
      if (m < 2)
        return false;
    return true;
  }

  bool is_trivial() const { return free_rank == 0 && torsion.moduli.empty(); }
  bool is_finite() const { return free_rank == 0; }

  Int torsion_order() const {
    Int n = 1;
    for (const Int& m : torsion.moduli)
      n *= m;
    return n;
  }

  bool operator==(const FinAbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const FinAbGroup& o) const { return !(*this == o); }
};

namespace detail {

inline std::map<Int, int> factorize(Int n) {
  std::map<Int, int> out;
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1)
    ++out[n];
  return out;
}

// Assemble invariant factors from prime exponent multisets. exps[p] holds
// the exponents of p over the input moduli (unsorted, zeros absent).
// Result is ascending and padded with leading 1s to `count` entries.
inline std::vector<Int> invariant_factors_from_exponents(
    std::map<Int, std::vector<int>> exps, std::size_t count) {
  std::size_t needed = 0;
  for (auto& [p, v] : exps) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    needed = std::max(needed, v.size());
  }
  require_input(needed <= count, "invariant factors: more factors than slots");
  std::vector<Int> desc(count, 1);
  for (const auto& [p, v] : exps)
    for (std::size_t i = 0; i < v.size(); ++i) {
      Int q = 1;
      for (int e = 0; e < v[i]; ++e)
        q *= p;
      desc[i] *= q;
    }
  std::reverse(desc.begin(), desc.end());
  return desc;
}

}  // namespace detail

// Invariant factors of Z/m_1 x ... x Z/m_k, returned as a chain of the
// same length k (leading entries pad out as 1s): (4,2) -> (2,4),
// (6,4) -> (2,12), (1,) -> (1).
inline DivisorChain normalize_divisor_chain(const std::vector<Int>& moduli) {
  std::map<Int, std::vector<int>> exps;
  for (const Int& m : moduli) {
    require_input(m > 0, "normalize_divisor_chain: moduli must be positive, got " + m.str());
    for (const auto& [p, e] : detail::factorize(m))
      exps[p].push_back(e);
  }
  return DivisorChain(detail::invariant_factors_from_exponents(std::move(exps), moduli.size()));
}

inline FinAbGroup make_finab(std::size_t free_rank, const std::vector<Int>& torsion_moduli) {
  FinAbGroup g;
  g.free_rank = free_rank;
  if (!torsion_moduli.empty()) {
    DivisorChain chain = normalize_divisor_chain(torsion_moduli);
    g.torsion.moduli = chain.nontrivial();
  }
  return g;
}

// Cokernel of A viewed as a map Z^cols -> Z^rows.
inline FinAbGroup coker_structure(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  std::size_t rank = 0;
  std::vector<Int> torsion;
  for (const Int& d : s.factors.moduli)
    if (d != 0) {
      ++rank;
      if (d > 1)
        torsion.push_back(d);
    }
  FinAbGroup g;
  g.free_rank = a.rows - rank;
  g.torsion.moduli = std::move(torsion);  // SNF factors are already a chain
  return g;
}

// Kernel of the torus isogeny (C*)^n -> (C*)^n induced by A on
// cocharacter lattices: a finite group, mu_{d_1} x ... x mu_{d_n} for the
// invariant factors d_i of A.
inline FinAbGroup torus_kernel(const IntMatrix& a) {
  require_input(a.is_square(), "not an isogeny: matrix must be square");
  SmithDecomposition s = smith_normal_form(a);
  std::vector<Int> torsion;
  for (const Int& d : s.factors.moduli) {
    require_input(d != 0, "not an isogeny: matrix is singular");
    if (d > 1)
      torsion.push_back(d);
  }
  FinAbGroup g;
  g.torsion.moduli = std::move(torsion);
  return g;
}

// Brute-force cross-check for torus_kernel that never looks at a Smith
// form: enumerate x in (Z/M)^n with A x = 0 (mod M) and recover the
// group structure from the element order census. When M is a multiple of
// |det A| the answer equals torus_kernel(A); for other M it is the
// M-torsion part of the kernel subscheme's points.
inline FinAbGroup torus_points_kernel_oracle(const IntMatrix& a, std::int64_t big_m,
                                             std::int64_t max_points = 100000000) {
  require_input(a.is_square(), "points oracle: matrix must be square");
  require_input(big_m >= 1, "points oracle: modulus must be >= 1");
  const std::size_t n = a.rows;
  if (n == 0 || big_m == 1)
    return FinAbGroup{};

  Int total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= big_m;
    if (total > max_points)
      fail_limit("points oracle: M^n exceeds enumeration cap");
  }

  std::vector<std::int64_t> amod(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int r = a.at(i, j) % big_m;
      if (r < 0)
        r += big_m;
      amod[i * n + j] = static_cast<std::int64_t>(r);
    }

  // odometer over (Z/M)^n keeping s = A x mod M incrementally
  std::vector<std::int64_t> x(n, 0), s(n, 0);
  std::map<std::int64_t, std::int64_t> order_tally;  // element order -> count
  for (;;) {
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] != 0) {
        zero = false;
        break;
      }
    if (zero) {
      std::int64_t ord = 1;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t oj = big_m / std::gcd(big_m, x[j]);
        ord = std::lcm(ord, oj);
      }
      ++order_tally[ord];
    }
    // advance
    std::size_t j = 0;
    while (j < n && x[j] == big_m - 1) {
      for (std::size_t i = 0; i < n; ++i) {
        s[i] -= (x[j] % big_m) * (amod[i * n + j] % big_m) % big_m;
        s[i] %= big_m;
        if (s[i] < 0)
          s[i] += big_m;
      }
      x[j] = 0;
      ++j;
    }
    if (j == n)
      break;
    ++x[j];
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += amod[i * n + j];
      if (s[i] >= big_m)
        s[i] -= big_m;
    }
  }

  std::int64_t count = 0;
  for (const auto& [ord, c] : order_tally)
    count += c;

  // census: for p^j, c_j = #{x : p^j x = 0}; c_j / c_{j-1} = p^(number of
  // invariant factors with p-exponent >= j)
  std::map<Int, std::vector<int>> exps;
  std::size_t max_factors = 0;
  for (const auto& [p, e0] : detail::factorize(Int(count))) {
    (void)e0;
    std::int64_t p64 = static_cast<std::int64_t>(p);
    std::vector<int> ge;  // ge[j-1] = # factors with exponent >= j
    std::int64_t prev = 0;
    std::int64_t pj = 1;
    for (;;) {
      std::int64_t cj = 0;  // # x with p^j x = 0, i.e. order dividing p^j
      for (const auto& [ord, c] : order_tally)
        if (pj % ord == 0)
          cj += c;
      if (prev == 0) {
        prev = cj;  // j = 0: count of x with order dividing 1
        pj *= p64;
        continue;
      }
      if (cj == prev)
        break;
      std::int64_t ratio = cj / prev;
      int k = 0;
      while (ratio > 1) {
        require_input(ratio % p64 == 0, "points oracle: census ratio not a prime power");
        ratio /= p64;
        ++k;
      }
      ge.push_back(k);
      prev = cj;
      pj *= p64;
    }
    std::vector<int> factor_exps;  // exponent of p in the i-th largest factor
    if (!ge.empty()) {
      for (int i = 1; i <= ge[0]; ++i) {
        int e = 0;
        for (std::size_t j = 0; j < ge.size(); ++j)
          if (ge[j] >= i)
            ++e;
        factor_exps.push_back(e);
      }
    }
    max_factors = std::max(max_factors, factor_exps.size());
    exps[p] = std::move(factor_exps);
  }

  std::vector<Int> desc = detail::invariant_factors_from_exponents(std::move(exps), max_factors);
  FinAbGroup g;
  for (const Int& d : desc)
    if (d > 1)
      g.torsion.moduli.push_back(d);
  return g;
}

// ---- text form -------------------------------------------------------

// "1", "Z", "Z^2", "Z/4", "Z^2 x Z/2 x Z/4", ...
inline std::string format_finab(const FinAbGroup& g) {
  if (g.is_trivial())
    return "1";
  std::string out;
  if (g.free_rank == 1)
    out = "Z";
  else if (g.free_rank > 1)
    out = "Z^" + std::to_string(g.free_rank);
  for (const Int& m : g.torsion.moduli) {
    if (!out.empty())
      out += " x ";
    out += "Z/" + m.str();
  }
  return out;
}

// Finite kernels of isogenies print multiplicatively: "mu_2 x mu_4".
inline std::string format_mu(const FinAbGroup& g) {
  require_input(g.is_finite(), "format_mu: group has free part");
  if (g.is_trivial())
    return "trivial";
  std::string out;
  for (const Int& m : g.torsion.moduli) {
    if (!out.empty())
      out += " x ";
    out += "mu_" + m.str();
  }
  return out;
}

inline FinAbGroup parse_finab(const std::string& text) {
  FinAbGroup g;
  std::string stripped;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      stripped += c;
  if (stripped == "1" || stripped == "0")
    return g;
  std::vector<Int> torsion;
  for (const std::string& tok : detail::split(stripped, 'x')) {
    require_input(!tok.empty(), "group parse: empty factor in '" + text + "'");
    if (tok == "Z") {
      ++g.free_rank;
    } else if (tok.rfind("Z^", 0) == 0) {
      Int k = detail::parse_int_token(tok.substr(2), 0, 0);
      require_input(k >= 1, "group parse: free rank must be >= 1 in '" + tok + "'");
      g.free_rank += static_cast<std::size_t>(k);
    } else if (tok.rfind("Z/", 0) == 0) {
      Int m = detail::parse_int_token(tok.substr(2), 0, 0);
      require_input(m >= 2, "group parse: torsion modulus must be >= 2 in '" + tok + "'");
      torsion.push_back(m);
    } else {
      fail_input("group parse: unrecognized factor '" + tok + "'");
    }
  }
  for (std::size_t i = 0; i + 1 < torsion.size(); ++i)
    require_input(torsion[i + 1] % torsion[i] == 0,
                  "group parse: torsion moduli must form a divisor chain, got " +
                      torsion[i].str() + " before " + torsion[i + 1].str());
  g.torsion.moduli = std::move(torsion);
  return g;
}

}  // namespace fixedloci
