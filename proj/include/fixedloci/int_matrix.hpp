// Dense integer matrices with arbitrary-precision entries.
//
// Entries are boost::multiprecision::cpp_int, so no operation in this
// library ever overflows or rounds. Matrices are plain values; row-major.
// Text form: rows separated by ';', entries by ',' (e.g. "2,1;0,3").
#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fixedloci/errors.hpp"

namespace fixedloci {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> entries;  // row-major, size rows*cols

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      m.at(i, i) = d[i];
    return m;
  }

  bool is_square() const { return rows == cols; }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && at(i, j) != 0)
          return false;
    return true;
  }
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  require_input(a.cols == b.rows, "matrix product: inner dimensions disagree");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

// Fraction-free (Bareiss) elimination; every division below is exact.
inline Int determinant(const IntMatrix& a) {
  require_input(a.is_square(), "determinant: matrix must be square");
  std::size_t n = a.rows;
  if (n == 0)
    return 1;
  IntMatrix w = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace detail {

inline Int parse_int_token(const std::string& tok, std::size_t row, std::size_t col) {
  std::size_t b = 0, e = tok.size();
  while (b < e && std::isspace(static_cast<unsigned char>(tok[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(tok[e - 1])))
    --e;
  std::string t = tok.substr(b, e - b);
  auto where = [&] {
    return " at row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1);
  };
  if (t.empty())
    fail_input("matrix parse: empty entry" + where());
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size())
    fail_input("matrix parse: bare sign" + where());
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      fail_input("matrix parse: invalid integer '" + t + "'" + where());
  return Int(t);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace detail

inline IntMatrix parse_matrix(const std::string& text) {
  require_input(!text.empty(), "matrix parse: empty input");
  std::vector<std::vector<Int>> data;
  std::size_t r = 0;
  for (const std::string& rowtext : detail::split(text, ';')) {
    std::vector<Int> row;
    std::size_t c = 0;
    for (const std::string& tok : detail::split(rowtext, ','))
      row.push_back(detail::parse_int_token(tok, r, c++));
    if (!data.empty() && row.size() != data[0].size())
      fail_input("matrix parse: row " + std::to_string(r + 1) + " has " +
                 std::to_string(row.size()) + " entries, expected " +
                 std::to_string(data[0].size()));
    data.push_back(std::move(row));
    ++r;
  }
  IntMatrix m(data.size(), data[0].size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      m.at(i, j) = data[i][j];
  return m;
}

inline std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i)
      out += ';';
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j)
        out += ',';
      out += m.at(i, j).str();
    }
  }
  return out;
}

}  // namespace fixedloci
