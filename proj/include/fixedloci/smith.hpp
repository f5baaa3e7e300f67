// Smith normal form over the integers, with unimodular change of basis.
//
// smith_normal_form(A) returns U, D, V with U*A*V == D, U and V
// unimodular, D diagonal with nonnegative entries d_1 | d_2 | ... .
// The diagonal is returned in full (length min(rows, cols), including
// any 1s and trailing 0s); callers that want group invariants drop them.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "fixedloci/errors.hpp"
#include "fixedloci/int_matrix.hpp"

namespace fixedloci {

// Ordered list d_1 | d_2 | ... | d_k. Entries are nonnegative; a 0 means
// a free (infinite cyclic) factor and may only appear in a trailing run
// (n | 0 for every n, and 0 | 0). Chains compare equal modulo 1-entries:
// a 1 contributes a trivial factor, so (1,2,4) and (2,4) name the same
// group. normalize_divisor_chain() below produces chains from arbitrary
// positive moduli.
struct DivisorChain {
  std::vector<Int> moduli;

  DivisorChain() = default;
  explicit DivisorChain(std::vector<Int> m) : moduli(std::move(m)) {}
  DivisorChain(std::initializer_list<Int> m) : moduli(m) {}

  bool is_valid() const {
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      if (moduli[i] < 0)
        return false;
      if (i + 1 < moduli.size()) {
        if (moduli[i] == 0 && moduli[i + 1] != 0)
          return false;
        if (moduli[i] != 0 && moduli[i + 1] % moduli[i] != 0)
          return false;
      }
    }
    return true;
  }

  std::vector<Int> nontrivial() const {
    std::vector<Int> out;
    for (const Int& m : moduli)
      if (m != 1)
        out.push_back(m);
    return out;
  }

  bool operator==(const DivisorChain& o) const { return nontrivial() == o.nontrivial(); }
  bool operator!=(const DivisorChain& o) const { return !(*this == o); }
};

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular
  DivisorChain factors;  // full diagonal of D, length min(rows, cols)
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < m.cols; ++j)
    std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < m.rows; ++i)
    std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
inline void addmul_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0)
    return;
  for (std::size_t j = 0; j < m.cols; ++j)
    m.at(a, j) -= q * m.at(b, j);
}

inline void addmul_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
  if (q == 0)
    return;
  for (std::size_t i = 0; i < m.rows; ++i)
    m.at(i, a) -= q * m.at(i, b);
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  using namespace detail;
  const std::size_t m = a.rows, n = a.cols;
  require_input(m > 0 && n > 0, "smith_normal_form: empty matrix");
  IntMatrix w = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t k = std::min(m, n);

  for (std::size_t t = 0; t < k; ++t) {
    // pivot: entry of least absolute value in the trailing block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (w.at(i, j) != 0 &&
            (!found || abs_int(w.at(i, j)) < abs_int(w.at(pi, pj)))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found)
      break;  // trailing block is zero; remaining diagonal stays 0
    swap_rows(w, t, pi);
    swap_rows(u, t, pi);
    swap_cols(w, t, pj);
    swap_cols(v, t, pj);

    for (;;) {
      // clear column t, reselecting the pivot whenever a smaller
      // remainder appears; |pivot| strictly decreases, so this ends
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.at(i, t) == 0)
          continue;
        Int q = w.at(i, t) / w.at(t, t);
        addmul_row(w, i, t, q);
        addmul_row(u, i, t, q);
        if (w.at(i, t) != 0) {
          swap_rows(w, t, i);
          swap_rows(u, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.at(t, j) == 0)
          continue;
        Int q = w.at(t, j) / w.at(t, t);
        addmul_col(w, j, t, q);
        addmul_col(v, j, t, q);
        if (w.at(t, j) != 0) {
          swap_cols(w, t, j);
          swap_cols(v, t, j);
          clean = false;
        }
      }
      if (!clean)
        continue;
      // divisibility pass: pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (w.at(i, j) % w.at(t, t) != 0) {
            // fold row i into row t and restart the clearing loop
            addmul_row(w, t, i, Int(-1));
            addmul_row(u, t, i, Int(-1));
            divides = false;
          }
      if (divides)
        break;
    }
    if (w.at(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j)
        w.at(t, j) = -w.at(t, j);
      for (std::size_t j = 0; j < m; ++j)
        u.at(t, j) = -u.at(t, j);
    }
  }

  SmithDecomposition out;
  out.U = std::move(u);
  out.D = std::move(w);
  out.V = std::move(v);
  out.factors.moduli.reserve(k);
  for (std::size_t t = 0; t < k; ++t)
    out.factors.moduli.push_back(out.D.at(t, t));
  return out;
}

// Does A*x = b have an integer solution x? (b given as a column vector.)
inline bool lattice_solvable(const IntMatrix& a, const std::vector<Int>& b) {
  require_input(b.size() == a.rows, "lattice_solvable: rhs length must equal row count");
  SmithDecomposition s = smith_normal_form(a);
  // A = U^-1 D V^-1, so A x = b iff D y = U b with y = V^-1 x; any y works.
  std::vector<Int> c(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.rows; ++j)
      c[i] += s.U.at(i, j) * b[j];
  const std::size_t k = std::min(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const Int d = i < k ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0)
        return false;
    } else if (c[i] % d != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace fixedloci
