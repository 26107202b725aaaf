#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torspec/weights.hpp"

namespace torspec {

/// Element of Q/Z (+) Z^k: a root-of-unity exponent in [0,1) together with
/// exponents of k independent generic generators.
struct ValueGroupElement {
  Rational torsion{0};
  IntVector free;

  static ValueGroupElement identity(std::size_t k) { return {Rational(0), IntVector(k, 0)}; }

  bool is_identity() const {
    return torsion == Rational(0) && std::all_of(free.begin(), free.end(), [](Int x) { return x == 0; });
  }

  ValueGroupElement& operator+=(const ValueGroupElement& o) {
    if (free.size() != o.free.size()) throw InvalidInput("value group elements with different free ranks");
    torsion = mod_one(torsion + o.torsion);
    for (std::size_t j = 0; j < free.size(); ++j) free[j] = checked_add(free[j], o.free[j]);
    return *this;
  }
  friend ValueGroupElement operator+(ValueGroupElement a, const ValueGroupElement& b) { return a += b; }
  ValueGroupElement operator-() const {
    ValueGroupElement r{mod_one(-torsion), free};
    for (auto& x : r.free) x = checked_mul(x, -1);
    return r;
  }
  friend ValueGroupElement operator-(const ValueGroupElement& a, const ValueGroupElement& b) { return a + (-b); }
  ValueGroupElement scaled(Int k) const {
    ValueGroupElement r{mod_one(torsion * k), free};
    for (auto& x : r.free) x = checked_mul(x, k);
    return r;
  }

  /// Order of the torsion part (1 for no torsion).
  Int torsion_order() const { return torsion.denominator(); }

  friend bool operator==(const ValueGroupElement& a, const ValueGroupElement& b) {
    return a.torsion == b.torsion && a.free == b.free;
  }
  /// Canonical order: torsion fraction, then free exponents lexicographically.
  friend bool operator<(const ValueGroupElement& a, const ValueGroupElement& b) {
    if (a.torsion != b.torsion) return a.torsion < b.torsion;
    return a.free < b.free;
  }
};

struct ValueHash {
  std::size_t operator()(const ValueGroupElement& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(v.torsion.numerator()));
    mix(static_cast<std::uint64_t>(v.torsion.denominator()));
    for (Int x : v.free) mix(static_cast<std::uint64_t>(x));
    return static_cast<std::size_t>(h);
  }
};

/// Homomorphism from the weight lattice to the value group, given on the
/// fundamental weights.
struct TorusElement {
  const RootDatum* datum = nullptr;
  std::vector<ValueGroupElement> assignments;
  std::string label;
  // presentation only: generator names and a common denominator applied to
  // free exponents when printing (2 when square roots of generators occur)
  std::vector<std::string> generator_names;
  Int free_denominator = 1;

  std::size_t free_rank() const { return assignments.empty() ? 0 : assignments[0].free.size(); }
};

inline std::string default_generator_name(std::size_t j) {
  if (j < 26) return std::string(1, static_cast<char>('a' + j));
  return "g" + std::to_string(j);
}

inline TorusElement torus_element(const RootDatum& d, std::vector<ValueGroupElement> assignments,
                                  std::string label = {}) {
  if (assignments.size() != d.rank)
    throw InvalidInput(d.name() + " needs " + std::to_string(d.rank) + " fundamental-weight values, got " +
                       std::to_string(assignments.size()));
  const std::size_t k = assignments[0].free.size();
  for (auto& a : assignments) {
    if (a.free.size() != k) throw InvalidInput("all free vectors of a torus element must have the same length");
    a.torsion = mod_one(a.torsion);
  }
  TorusElement s;
  s.datum = &d;
  s.assignments = std::move(assignments);
  s.label = std::move(label);
  for (std::size_t j = 0; j < k; ++j) s.generator_names.push_back(default_generator_name(j));
  return s;
}

inline ValueGroupElement evaluate(const TorusElement& s, const Weight& mu) {
  s.datum->require(mu);
  ValueGroupElement v = ValueGroupElement::identity(s.free_rank());
  for (std::size_t i = 0; i < mu.rank(); ++i)
    if (mu[i] != 0) v += s.assignments[i].scaled(mu[i]);
  return v;
}

inline bool is_regular(const TorusElement& s) {
  return std::none_of(s.datum->positive_roots.begin(), s.datum->positive_roots.end(),
                      [&](const Weight& a) { return evaluate(s, a).is_identity(); });
}

inline bool is_central(const TorusElement& s) {
  return std::all_of(s.datum->simple_roots.begin(), s.datum->simple_roots.end(),
                     [&](const Weight& a) { return evaluate(s, a).is_identity(); });
}

inline bool separates_weights(const TorusElement& s, const std::vector<Weight>& weights) {
  std::unordered_set<ValueGroupElement, ValueHash> seen;
  for (const Weight& w : weights)
    if (!seen.insert(evaluate(s, w)).second) return false;
  return true;
}

/// Orders of the roots of unity the element uses (empty when torsion-free);
/// such an element exists in characteristic p only when p divides none of them.
inline std::set<Int> torsion_orders(const TorusElement& s) {
  std::set<Int> out;
  for (const auto& a : s.assignments)
    if (a.torsion != Rational(0)) out.insert(a.torsion.denominator());
  return out;
}

/// Renders a value multiplicatively: "1", "-1", "zeta4^3", "-a^2", "a^-2",
/// "zeta3*a*b^-1", "a^(1/2)".
inline std::string format_value(const ValueGroupElement& v, const std::vector<std::string>& names = {},
                                Int free_denominator = 1) {
  std::vector<std::string> factors;
  for (std::size_t j = 0; j < v.free.size(); ++j) {
    if (v.free[j] == 0) continue;
    const std::string name = j < names.size() ? names[j] : default_generator_name(j);
    const Rational e(v.free[j], free_denominator);
    if (e == Rational(1)) factors.push_back(name);
    else if (e.denominator() == 1) factors.push_back(name + "^" + std::to_string(e.numerator()));
    else factors.push_back(name + "^(" + to_string(e) + ")");
  }
  std::string free_part;
  for (std::size_t i = 0; i < factors.size(); ++i) free_part += (i ? "*" : "") + factors[i];
  if (v.torsion == Rational(0)) return factors.empty() ? "1" : free_part;
  if (v.torsion == Rational(1, 2)) return factors.empty() ? "-1" : "-" + free_part;
  const Int d = v.torsion.denominator(), k = v.torsion.numerator();
  std::string zeta = "zeta" + std::to_string(d) + (k == 1 ? "" : "^" + std::to_string(k));
  return factors.empty() ? zeta : zeta + "*" + free_part;
}

inline std::string format_value(const TorusElement& s, const ValueGroupElement& v) {
  return format_value(v, s.generator_names, s.free_denominator);
}

// ---------------------------------------------------------------------------
// epsilon shorthand

namespace detail {

struct EpsilonValue {
  Rational torsion{0};
  std::map<std::size_t, Int> free;  // generator index -> exponent
};

class EpsilonParser {
 public:
  explicit EpsilonParser(std::string_view text) : text_(text) {}

  std::vector<EpsilonValue> parse() {
    std::vector<EpsilonValue> out;
    for (;;) {
      skip_ws();
      out.push_back(parse_entry());
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',') fail("expected ','");
      ++pos_;
    }
    return out;
  }

  const std::vector<std::string>& symbols() const { return symbols_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("malformed epsilon shorthand '" + std::string(text_) + "' at position " +
                       std::to_string(pos_) + ": " + msg);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  Int parse_int() {
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    const std::size_t start = pos_;
    Int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return neg ? -v : v;
  }

  EpsilonValue parse_entry() {
    Rational sign(0);
    if (pos_ < text_.size() && text_[pos_] == '-') {
      sign = Rational(1, 2);
      ++pos_;
    }
    bool invert = false;
    if (peek("1/")) {
      invert = true;
      pos_ += 2;
    }
    EpsilonValue v;
    for (;;) {
      skip_ws();
      parse_factor(v);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    // the sign applies to the whole entry: -1/a is -(a^-1)
    if (invert) {
      v.torsion = mod_one(-v.torsion);
      for (auto& [idx, e] : v.free) e = -e;
    }
    v.torsion = mod_one(v.torsion + sign);
    return v;
  }

  void parse_factor(EpsilonValue& v) {
    if (pos_ >= text_.size()) fail("expected a value");
    const char c = text_[pos_];
    if (c == '1' && (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return;
    }
    if (peek("zeta") && pos_ + 4 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 4]))) {
      pos_ += 4;
      const Int d = parse_int();
      if (d <= 0) fail("root of unity order must be positive");
      Int k = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        k = parse_int();
      }
      v.torsion = mod_one(v.torsion + Rational(k, d));
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected 1, a symbol, or zeta<d>");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    Int e = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      e = parse_int();
    }
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    const std::size_t idx = static_cast<std::size_t>(it - symbols_.begin());
    if (it == symbols_.end()) symbols_.push_back(name);
    v.free[idx] += e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> symbols_;
};

}  // namespace detail

/// Builds the element with the given epsilon-values (classical types). For
/// A_n the n+1 values must multiply to 1. Where a fundamental weight is a
/// half-sum of epsilons, the torsion part takes the square root with
/// representatives in [0,1), and free generators are replaced by square
/// roots (free_denominator = 2) when an odd exponent sum appears.
inline TorusElement element_from_epsilon(const RootDatum& d, const std::vector<ValueGroupElement>& eps,
                                         std::vector<std::string> names = {}, std::string label = {}) {
  if (!d.epsilon_map)
    throw InvalidInput("epsilon values are only supported for types A-D, not " + d.name());
  const auto& e = *d.epsilon_map;
  if (eps.size() != e.size())
    throw InvalidInput(d.name() + " takes " + std::to_string(e.size()) + " epsilon values, got " +
                       std::to_string(eps.size()));
  const std::size_t k = eps[0].free.size();
  for (const auto& v : eps)
    if (v.free.size() != k) throw InvalidInput("epsilon values with different free ranks");
  if (d.family == Family::A) {
    ValueGroupElement total = ValueGroupElement::identity(k);
    for (const auto& v : eps) total += v;
    if (!total.is_identity())
      throw InvalidInput("epsilon values for " + d.name() + " must multiply to 1 (determinant one); product is " +
                         format_value(total, names));
  }
  std::vector<Rational> tors(d.rank, Rational(0));
  std::vector<std::vector<Rational>> fr(d.rank, std::vector<Rational>(k, Rational(0)));
  Int den = 1;
  for (std::size_t i = 0; i < d.rank; ++i) {
    for (std::size_t r = 0; r < e.size(); ++r) {
      if (e[r][i] == Rational(0)) continue;
      tors[i] += e[r][i] * eps[r].torsion;
      for (std::size_t j = 0; j < k; ++j) fr[i][j] += e[r][i] * eps[r].free[j];
    }
    for (const auto& q : fr[i]) den = std::lcm(den, q.denominator());
  }
  std::vector<ValueGroupElement> assignments;
  for (std::size_t i = 0; i < d.rank; ++i) {
    ValueGroupElement v{mod_one(tors[i]), IntVector(k, 0)};
    for (std::size_t j = 0; j < k; ++j) {
      const Rational q = fr[i][j] * den;
      v.free[j] = q.numerator();
    }
    assignments.push_back(std::move(v));
  }
  TorusElement s = torus_element(d, std::move(assignments), std::move(label));
  s.free_denominator = den;
  for (std::size_t j = 0; j < k && j < names.size(); ++j) s.generator_names[j] = names[j];
  return s;
}

/// Parses shorthand such as "a,a,1/a,1/a", "a,a,-1/a,-1/a", "1,-1",
/// "zeta4,a*b^-1,...": one comma-separated value per epsilon coordinate.
/// A leading '-' multiplies by -1, a "1/" prefix inverts the entry, and
/// factors are joined by '*'. Symbols become independent generators in order
/// of first appearance.
inline TorusElement parse_epsilon_shorthand(const RootDatum& d, std::string_view text) {
  if (!d.epsilon_map)
    throw InvalidInput("epsilon shorthand is only supported for types A-D, not " + d.name());
  detail::EpsilonParser parser(text);
  const auto entries = parser.parse();
  const std::size_t k = parser.symbols().size();
  std::vector<ValueGroupElement> eps;
  for (const auto& en : entries) {
    ValueGroupElement v = ValueGroupElement::identity(k);
    v.torsion = en.torsion;
    for (const auto& [idx, ex] : en.free) v.free[idx] = ex;
    eps.push_back(std::move(v));
  }
  return element_from_epsilon(d, eps, parser.symbols(), std::string(text));
}

// ---------------------------------------------------------------------------
// strata

/// Elements on which the given characters are trivial; torsion_choices maps
/// the index of a torsion generator of the quotient lattice to the root of
/// unity (as an exponent in [0,1)) it is sent to.
struct StratumSpec {
  const RootDatum* datum = nullptr;
  std::vector<Weight> kernel_weights;
  std::map<std::size_t, Rational> torsion_choices;
};

/// Omega / <kernel> via Smith normal form. With kernel rows K, U K V = D,
/// so y = mu V are coordinates in which the kernel is (+) d_j Z.
struct StratumQuotient {
  IntMatrix V;
  std::size_t kernel_rank = 0;
  std::vector<std::size_t> torsion_columns;  // columns j < kernel_rank with d_j > 1
  std::vector<Int> torsion_orders;
  std::vector<std::size_t> free_columns;  // columns j >= kernel_rank
};

inline StratumQuotient stratum_quotient(const StratumSpec& spec) {
  const RootDatum& d = *spec.datum;
  StratumQuotient q;
  if (spec.kernel_weights.empty()) {
    q.V = identity_matrix(d.rank);
    for (std::size_t j = 0; j < d.rank; ++j) q.free_columns.push_back(j);
    return q;
  }
  IntMatrix k;
  for (const Weight& w : spec.kernel_weights) {
    d.require(w);
    k.emplace_back(w.coords().begin(), w.coords().end());
  }
  const SmithForm sf = smith_normal_form(k);
  q.V = sf.V;
  q.kernel_rank = sf.rank;
  for (std::size_t j = 0; j < sf.rank; ++j)
    if (sf.invariants[j] > 1) {
      q.torsion_columns.push_back(j);
      q.torsion_orders.push_back(sf.invariants[j]);
    }
  for (std::size_t j = sf.rank; j < d.rank; ++j) q.free_columns.push_back(j);
  return q;
}

/// Roots of unity of order 1, 2, 3 or 4 that are d-th roots of unity.
inline std::vector<Rational> admissible_torsion_values(Int order) {
  std::vector<Rational> out;
  for (Int c = 0; c < order; ++c) {
    const Rational v(c, order);
    if (v.denominator() <= 4) out.push_back(v);
  }
  return out;
}

/// The generic element of the stratum: free quotient generators go to
/// independent generators, torsion generators to the chosen roots of unity
/// (seeded among orders 1-4 when not chosen).
inline TorusElement generic_stratum_element(const StratumSpec& spec, std::uint64_t seed = 0) {
  if (!spec.datum) throw InvalidInput("stratum has no root datum");
  const RootDatum& d = *spec.datum;
  const StratumQuotient q = stratum_quotient(spec);
  if (q.free_columns.empty()) throw InvalidInput("stratum is central/finite: the kernel has full rank");
  std::mt19937_64 rng(seed);
  std::vector<Rational> choice(q.torsion_columns.size());
  for (std::size_t t = 0; t < q.torsion_columns.size(); ++t) {
    const Int order = q.torsion_orders[t];
    auto it = spec.torsion_choices.find(t);
    if (it != spec.torsion_choices.end()) {
      const Rational c = mod_one(it->second);
      if ((c * order).denominator() != 1)
        throw InvalidInput("torsion choice " + to_string(c) + " is not a root of unity of order dividing " +
                           std::to_string(order));
      choice[t] = c;
    } else {
      const auto vals = admissible_torsion_values(order);
      choice[t] = vals[std::uniform_int_distribution<std::size_t>(0, vals.size() - 1)(rng)];
    }
  }
  for (const auto& [t, c] : spec.torsion_choices)
    if (t >= q.torsion_columns.size())
      throw InvalidInput("torsion choice for generator " + std::to_string(t) + ", but the quotient has " +
                         std::to_string(q.torsion_columns.size()) + " torsion generators");
  std::vector<ValueGroupElement> assignments;
  for (std::size_t i = 0; i < d.rank; ++i) {
    ValueGroupElement v = ValueGroupElement::identity(q.free_columns.size());
    Rational t(0);
    for (std::size_t c = 0; c < q.torsion_columns.size(); ++c) t += choice[c] * q.V[i][q.torsion_columns[c]];
    v.torsion = mod_one(t);
    for (std::size_t f = 0; f < q.free_columns.size(); ++f) v.free[f] = q.V[i][q.free_columns[f]];
    assignments.push_back(std::move(v));
  }
  std::string label = "kernel {";
  for (std::size_t i = 0; i < spec.kernel_weights.size(); ++i)
    label += (i ? ", " : "") + format_coords(spec.kernel_weights[i]);
  label += "}";
  if (!choice.empty()) {
    label += " torsion (";
    for (std::size_t c = 0; c < choice.size(); ++c) label += (c ? ", " : "") + to_string(choice[c]);
    label += ")";
  }
  return torus_element(d, std::move(assignments), label);
}

/// Every combination of admissible torsion values, one per torsion generator.
inline std::vector<std::map<std::size_t, Rational>> torsion_decorations(const StratumSpec& spec) {
  const StratumQuotient q = stratum_quotient(spec);
  std::vector<std::map<std::size_t, Rational>> out{{}};
  for (std::size_t t = 0; t < q.torsion_orders.size(); ++t) {
    std::vector<std::map<std::size_t, Rational>> next;
    for (const auto& partial : out)
      for (const Rational& v : admissible_torsion_values(q.torsion_orders[t])) {
        auto m = partial;
        m[t] = v;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

namespace detail {

inline IntMatrix lattice_of(const std::vector<Weight>& gens) {
  IntMatrix m;
  for (const Weight& w : gens) m.emplace_back(w.coords().begin(), w.coords().end());
  return hermite_normal_form(m);
}

inline IntMatrix reflect_lattice(const RootDatum& d, const IntMatrix& hnf, std::size_t i) {
  IntMatrix m = hnf;
  for (auto& row : m) {
    const Int c = row[i];
    for (std::size_t k = 0; k < d.rank; ++k) row[k] -= c * d.cartan[k][i];
  }
  return hermite_normal_form(m);
}

}  // namespace detail

struct StrataCatalog {
  std::vector<StratumSpec> strata;  // one per W-class of proper kernel lattice
  std::size_t finite_classes = 0;   // W-classes whose kernel has full rank (skipped)
  std::size_t subsets_examined = 0;
};

/// Kernel lattices spanned by 1..depth positive roots, up to the Weyl group
/// action on lattices. Each class is represented by its first root subset in
/// index order.
inline StrataCatalog canonical_root_strata(const RootDatum& d, int depth) {
  if (depth < 1) throw InvalidInput("stratum depth must be at least 1");
  StrataCatalog cat;
  std::set<IntMatrix> seen;
  const std::size_t np = d.positive_roots.size();
  std::vector<std::size_t> idx;
  auto visit = [&](const std::vector<std::size_t>& subset) {
    ++cat.subsets_examined;
    std::vector<Weight> gens;
    for (std::size_t i : subset) gens.push_back(d.positive_roots[i]);
    const IntMatrix hnf = detail::lattice_of(gens);
    if (seen.count(hnf)) return;
    std::vector<IntMatrix> queue{hnf};
    seen.insert(hnf);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t i = 0; i < d.rank; ++i) {
        IntMatrix r = detail::reflect_lattice(d, queue[h], i);
        if (seen.insert(r).second) queue.push_back(std::move(r));
      }
    if (hnf.size() == d.rank) {
      ++cat.finite_classes;
      return;
    }
    cat.strata.push_back(StratumSpec{&d, gens, {}});
  };
  // subsets of size 1 first, then 2, ... so smaller kernels represent their class
  for (int size = 1; size <= depth; ++size) {
    auto exact = [&](auto& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        visit(idx);
        return;
      }
      for (std::size_t i = start; i < np; ++i) {
        idx.push_back(i);
        self(self, i + 1, remaining - 1);
        idx.pop_back();
      }
    };
    exact(exact, 0, size);
  }
  return cat;
}

}  // namespace torspec
