#pragma once

// Exact integer helpers: checked 64-bit arithmetic, small dense integer
// matrices, Smith and Hermite normal forms.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "torspec/error.hpp"

namespace torspec {

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;

// boost::rational's mixed comparisons against other integer types recurse
// forever under C++20's rewritten operators; these exact matches win.
inline bool operator==(const Rational& a, int b) { return a == Rational(b); }
inline bool operator!=(const Rational& a, int b) { return !(a == Rational(b)); }

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

/// Remainder in [0, m) for m > 0.
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Rational reduced into [0, 1).
inline Rational mod_one(const Rational& q) {
  const Int den = q.denominator();
  return Rational(floor_mod(q.numerator(), den), den);
}

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
inline Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = checked_sub(old_r, checked_mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked_sub(old_s, checked_mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked_sub(old_t, checked_mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(rows, IntVector(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return out;
}

inline IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k)
      out[i] = checked_add(out[i], checked_mul(a[i][k], v[k]));
  return out;
}

/// Result of a Smith normal form computation: U * A * V = D with U, V
/// unimodular and D diagonal, d_0 | d_1 | ... | d_{rank-1}, all positive.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  IntVector invariants;  // the nonzero diagonal entries, in order
  std::size_t rank = 0;
};

namespace detail {

inline void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

inline void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i += f * row_j
inline void add_row(IntMatrix& a, std::size_t i, std::size_t j, Int f) {
  if (f == 0) return;
  for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] = checked_add(a[i][k], checked_mul(f, a[j][k]));
}

// col_i += f * col_j
inline void add_col(IntMatrix& a, std::size_t i, std::size_t j, Int f) {
  if (f == 0) return;
  for (auto& row : a) row[i] = checked_add(row[i], checked_mul(f, row[j]));
}

}  // namespace detail

/// Smith normal form of an n x m integer matrix.
inline SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm sf;
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : a[0].size();
  sf.D = a;
  sf.U = identity_matrix(n);
  sf.V = identity_matrix(m);
  IntMatrix& d = sf.D;

  std::size_t t = 0;
  for (; t < std::min(n, m); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      std::size_t pi = n, pj = m;
      Int best = 0;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j)
          if (d[i][j] != 0 && (best == 0 || std::abs(d[i][j]) < best)) {
            best = std::abs(d[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) goto done;
      if (pi != t) {
        detail::swap_rows(d, pi, t);
        detail::swap_rows(sf.U, pi, t);
      }
      if (pj != t) {
        detail::swap_cols(d, pj, t);
        detail::swap_cols(sf.V, pj, t);
      }

      bool dirty = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        const Int q = d[i][t] / d[t][t];
        detail::add_row(d, i, t, -q);
        detail::add_row(sf.U, i, t, -q);
        if (d[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        const Int q = d[t][j] / d[t][t];
        detail::add_col(d, j, t, -q);
        detail::add_col(sf.V, j, t, -q);
        if (d[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (d[i][j] % d[t][t] != 0) {
            detail::add_row(d, t, i, 1);
            detail::add_row(sf.U, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : sf.U[t]) x = -x;
    }
    sf.invariants.push_back(d[t][t]);
  }
done:
  sf.rank = sf.invariants.size();
  return sf;
}

/// Row-style Hermite normal form of the lattice spanned by the rows of
/// `generators`: echelon rows with positive pivots and entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped, so the result is a
/// canonical basis of the row lattice.
inline IntMatrix hermite_normal_form(IntMatrix h) {
  if (h.empty()) return h;
  const std::size_t cols = h[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < h.size(); ++c) {
    // gcd-combine every lower row into `row` for this column
    for (std::size_t i = row + 1; i < h.size(); ++i) {
      if (h[i][c] == 0) continue;
      if (h[row][c] == 0) {
        std::swap(h[row], h[i]);
        continue;
      }
      Int x, y;
      const Int a = h[row][c], b = h[i][c];
      const Int g = ext_gcd(a, b, x, y);
      const Int ag = a / g, bg = b / g;
      IntVector r1(cols), r2(cols);
      for (std::size_t k = 0; k < cols; ++k) {
        r1[k] = checked_add(checked_mul(x, h[row][k]), checked_mul(y, h[i][k]));
        r2[k] = checked_sub(checked_mul(ag, h[i][k]), checked_mul(bg, h[row][k]));
      }
      h[row] = std::move(r1);
      h[i] = std::move(r2);
    }
    if (h[row][c] == 0) continue;
    if (h[row][c] < 0)
      for (auto& x : h[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      const Int q = h[i][c] >= 0 ? h[i][c] / h[row][c] : -((-h[i][c] + h[row][c] - 1) / h[row][c]);
      if (q != 0)
        for (std::size_t k = 0; k < cols; ++k) h[i][k] = checked_sub(h[i][k], checked_mul(q, h[row][k]));
    }
    ++row;
  }
  h.resize(row);
  return h;
}

/// Whether `v` lies in the row lattice of a matrix already in Hermite normal form.
inline bool in_row_lattice(const IntMatrix& hnf, IntVector v) {
  for (const auto& r : hnf) {
    std::size_t c = 0;
    while (c < r.size() && r[c] == 0) ++c;
    if (c == r.size()) continue;
    for (std::size_t k = 0; k < c; ++k)
      if (v[k] != 0) return false;
    if (v[c] % r[c] != 0) return false;
    const Int q = v[c] / r[c];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = checked_sub(v[k], checked_mul(q, r[k]));
  }
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

/// Exact inverse of a nonsingular square integer matrix, as an integer
/// numerator matrix together with a positive common denominator.
inline std::pair<IntMatrix, Int> rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InternalError("singular matrix in rational_inverse");
    std::swap(m[p], m[c]);
    const Rational piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  Int den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) den = std::lcm(den, m[i][n + j].denominator());
  IntMatrix num(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = m[i][n + j];
      num[i][j] = checked_mul(q.numerator(), den / q.denominator());
    }
  return {num, den};
}

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace torspec
