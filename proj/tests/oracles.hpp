#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library beyond its value types and the stored Cartan matrix.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "torspec/torspec.hpp"

namespace oracle {

using torspec::Family;
using torspec::Int;
using torspec::IntMatrix;
using torspec::Rational;
using torspec::RootDatum;
using torspec::Weight;
using RVec = std::vector<Rational>;

inline std::size_t eps_dim(Family f, std::size_t n) { return f == Family::A ? n + 1 : n; }

inline RVec unit(std::size_t dim, std::size_t i, int c = 1) {
  RVec v(dim, Rational(0));
  v[i] = Rational(c);
  return v;
}

inline RVec add(RVec a, const RVec& b, int sb = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += Rational(sb) * b[i];
  return a;
}

inline Rational dot(const RVec& a, const RVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Bourbaki simple roots in the standard realization.
inline std::vector<RVec> simple_roots_eps(Family f, std::size_t n) {
  const std::size_t dim = eps_dim(f, n);
  std::vector<RVec> s;
  for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(add(unit(dim, i), unit(dim, i + 1), -1));
  switch (f) {
    case Family::A: s.push_back(add(unit(dim, n - 1), unit(dim, n), -1)); break;
    case Family::B: s.push_back(unit(dim, n - 1)); break;
    case Family::C: s.push_back(unit(dim, n - 1, 2)); break;
    case Family::D: s.push_back(add(unit(dim, n - 2), unit(dim, n - 1))); break;
    default: break;
  }
  return s;
}

/// The full Bourbaki root set.
inline std::vector<RVec> roots_eps(Family f, std::size_t n) {
  const std::size_t dim = eps_dim(f, n);
  std::vector<RVec> r;
  if (f == Family::A) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (i != j) r.push_back(add(unit(dim, i), unit(dim, j), -1));
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) r.push_back(add(unit(dim, i, a), unit(dim, j, b)));
  for (std::size_t i = 0; i < n; ++i)
    for (int a : {1, -1}) {
      if (f == Family::B) r.push_back(unit(dim, i, a));
      if (f == Family::C) r.push_back(unit(dim, i, 2 * a));
    }
  return r;
}

/// <x, alpha_i^v> for every simple root.
inline std::vector<int> omega_coords(Family f, std::size_t n, const RVec& x) {
  std::vector<int> out;
  for (const RVec& a : simple_roots_eps(f, n)) {
    const Rational q = Rational(2) * dot(x, a) / dot(a, a);
    if (q.denominator() != 1) throw std::logic_error("not in the weight lattice");
    out.push_back(static_cast<int>(q.numerator()));
  }
  return out;
}

inline IntMatrix cartan_from_eps(Family f, std::size_t n) {
  const auto s = simple_roots_eps(f, n);
  IntMatrix c(n, torspec::IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = (Rational(2) * dot(s[j], s[i]) / dot(s[i], s[i])).numerator();
  return c;
}

/// Unique solution of a x = b over Q (a square), if a is invertible.
inline std::optional<RVec> solve(const IntMatrix& a, RVec b) {
  const std::size_t n = a.size();
  std::vector<RVec> m(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == Rational(0)) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[col]);
    std::swap(b[p], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rational(0)) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = 0; k < n; ++k) m[r][k] -= f * m[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

inline Rational determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<RVec> m(n, RVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == Rational(0)) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

inline std::size_t rank_of(std::vector<RVec> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == Rational(0)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline RVec to_rvec(const Weight& w) {
  RVec v;
  for (int x : w.coords()) v.push_back(Rational(x));
  return v;
}

/// lambda - mu is a nonnegative integer combination of simple roots
/// (simple root j is column j of the Cartan matrix).
inline bool dominated_or_equal(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  const auto c = solve(d.cartan, to_rvec(lambda - mu));
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.denominator() == 1 && q >= Rational(0); });
}

inline bool radical(const RootDatum& d, const Weight& mu) {
  const auto c = solve(d.cartan, to_rvec(mu));
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.denominator() == 1; });
}

/// All dominant weights in a box that lie below lambda.
inline std::set<std::vector<int>> subdominant_box(const RootDatum& d, const Weight& lambda, int box) {
  std::set<std::vector<int>> out;
  std::vector<int> c(d.rank, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d.rank) {
      const Weight mu(d.family, std::span<const int>(c));
      if (dominated_or_equal(d, mu, lambda)) out.insert(c);
      return;
    }
    for (int x = 0; x <= box; ++x) {
      c[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Closure of {mu} under simple reflections, written out from the Cartan
/// matrix: s_i(v)_j = v_j - v_i * C[j][i].
inline std::set<std::vector<int>> orbit_closure(const RootDatum& d, const Weight& mu) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> start(mu.coords().begin(), mu.coords().end());
  seen.insert(start);
  queue.push_back(start);
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (std::size_t i = 0; i < d.rank; ++i) {
      std::vector<int> v = queue[h];
      const int vi = v[i];
      for (std::size_t j = 0; j < d.rank; ++j) v[j] -= vi * static_cast<int>(d.cartan[j][i]);
      if (seen.insert(v).second) queue.push_back(v);
    }
  return seen;
}

/// Number of semistandard tableaux of the given shape and content.
inline Int kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  const std::size_t rows = shape.size();
  std::function<Int(std::size_t, std::vector<int>)> rec = [&](std::size_t letter, std::vector<int> cur) -> Int {
    if (letter == content.size()) return cur == shape ? 1 : 0;
    Int total = 0;
    std::vector<int> nu = cur;
    std::function<void(std::size_t, int)> place = [&](std::size_t r, int left) {
      if (r == rows) {
        if (left == 0) total += rec(letter + 1, nu);
        return;
      }
      const int hi = std::min(shape[r], r == 0 ? shape[0] : cur[r - 1]);
      for (int x = cur[r]; x <= hi && x - cur[r] <= left; ++x) {
        nu[r] = x;
        place(r + 1, left - (x - cur[r]));
      }
      nu[r] = cur[r];
    };
    place(0, content[letter]);
    return total;
  };
  return rec(0, std::vector<int>(rows, 0));
}

/// Partition of an A_n highest weight (n+1 rows).
inline std::vector<int> partition_of(const Weight& lambda) {
  const std::size_t n = lambda.rank();
  std::vector<int> p(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) p[j] += lambda[i];
  return p;
}

/// Content vector of an A_n weight inside V(lambda), if it is a valid one.
inline std::optional<std::vector<int>> content_of(const Weight& mu, int total) {
  const int n = static_cast<int>(mu.rank());
  int weighted = 0;
  for (int i = 0; i < n; ++i) weighted += (i + 1) * mu[static_cast<std::size_t>(i)];
  if ((total - weighted) % (n + 1) != 0) return std::nullopt;
  std::vector<int> m(static_cast<std::size_t>(n + 1));
  m[static_cast<std::size_t>(n)] = (total - weighted) / (n + 1);
  for (int j = n - 1; j >= 0; --j) m[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j + 1)] + mu[static_cast<std::size_t>(j)];
  if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; })) return std::nullopt;
  return m;
}

/// Compositions of total into parts nonnegative parts.
inline std::vector<std::vector<int>> compositions(int total, std::size_t parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      c[i] = left;
      out.push_back(c);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      c[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, total);
  return out;
}

}  // namespace oracle
