#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torspec/error.hpp"
#include "torspec/intmath.hpp"

namespace torspec {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_char(Family f) { return static_cast<char>(f); }

inline bool is_classical(Family f) {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

/// A weight in fundamental-weight coordinates, (<mu, alpha_1^v>, ..., <mu, alpha_n^v>),
/// tagged with the type of the root datum it belongs to.
class Weight {
 public:
  static constexpr std::size_t kMaxRank = 8;

  Weight() = default;

  Weight(Family family, std::size_t rank) : family_(family), rank_(static_cast<std::uint8_t>(rank)) {
    if (rank == 0 || rank > kMaxRank) throw InvalidInput("weight rank must be in 1..8");
  }

  Weight(Family family, std::span<const int> coords) : Weight(family, coords.size()) {
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  Weight(Family family, std::initializer_list<int> coords)
      : Weight(family, std::span<const int>(coords.begin(), coords.size())) {}

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }

  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }

  std::span<const int> coords() const { return {c_.data(), rank_}; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x == 0; });
  }
  bool is_dominant() const {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](int x) { return x >= 0; });
  }
  bool same_type(const Weight& o) const { return family_ == o.family_ && rank_ == o.rank_; }

  Weight& operator+=(const Weight& o) {
    require_same(o);
    for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    require_same(o);
    for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (std::size_t i = 0; i < a.rank_; ++i) a.c_[i] *= k;
    return a;
  }
  Weight operator-() const { return -1 * *this; }

  /// Sum of coordinates; enumeration bounds use it.
  int coordinate_sum() const {
    int s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += c_[i];
    return s;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.c_ == b.c_;
  }

  /// Lexicographic on coordinates; only meaningful within one type.
  friend bool lex_less(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.c_.begin(), a.c_.begin() + a.rank_, b.c_.begin(),
                                        b.c_.begin() + b.rank_);
  }

 private:
  void require_same(const Weight& o) const {
    if (!same_type(o)) throw InvalidInput("weights belong to different root data");
  }

  std::array<int, kMaxRank> c_{};
  Family family_ = Family::A;
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(family_char(w.family()));
    for (int x : w.coords()) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

struct WeightLexLess {
  bool operator()(const Weight& a, const Weight& b) const { return lex_less(a, b); }
};

/// Immutable root datum of a simple root system, Bourbaki numbering.
///
/// Conventions:
///  - cartan[i][j] = <alpha_j, alpha_i^v>, so simple root alpha_j in
///    omega-coordinates is column j of `cartan`.
///  - The invariant form is normalized so that short roots have squared
///    length 2: (omega_i, omega_j) = form_num[i][j] / form_den.
///  - Root-lattice coordinates of a weight v are inv_cartan_num * v / inv_cartan_den.
struct RootDatum {
  Family family = Family::A;
  std::size_t rank = 0;

  IntMatrix cartan;
  IntVector symmetrizer;  // (alpha_i, alpha_i) / 2, with short roots at 1

  IntMatrix inv_cartan_num;
  Int inv_cartan_den = 1;
  IntVector height_num;  // height(beta) * inv_cartan_den = height_num . beta

  IntMatrix form_num;
  Int form_den = 1;

  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;          // sorted by height, then lexicographically
  std::vector<IntVector> positive_root_coeffs;  // simple-root coordinates
  std::vector<IntVector> positive_root_form;    // form_num * alpha, for (x, alpha) * form_den
  std::vector<bool> positive_root_is_short;

  Weight rho;
  Weight highest_root;
  Weight highest_short_root;

  /// For A-D: column i holds omega_i in Bourbaki epsilon-coordinates
  /// (A_n uses n+1 coordinates, modulo eps_1 + ... + eps_{n+1}).
  std::optional<std::vector<std::vector<Rational>>> epsilon_map;

  Weight zero() const { return Weight(family, rank); }

  Weight omega(std::size_t i) const {
    Weight w = zero();
    w[i] = 1;
    return w;
  }

  Weight weight(std::initializer_list<int> coords) const {
    if (coords.size() != rank) throw InvalidInput("weight has wrong number of coordinates");
    return Weight(family, coords);
  }

  std::string name() const { return std::string(1, family_char(family)) + std::to_string(rank); }

  /// Unscaled pairing numerator: (x, y) * form_den.
  Int form_scaled(const Weight& x, const Weight& y) const {
    Int s = 0;
    for (std::size_t i = 0; i < rank; ++i) {
      if (x[i] == 0) continue;
      Int row = 0;
      for (std::size_t j = 0; j < rank; ++j) row += form_num[i][j] * y[j];
      s = checked_add(s, checked_mul(x[i], row));
    }
    return s;
  }

  Rational form(const Weight& x, const Weight& y) const { return Rational(form_scaled(x, y), form_den); }

  /// Order of the Weyl group.
  Int weyl_group_order() const {
    auto fact = [](Int n) {
      Int r = 1;
      for (Int k = 2; k <= n; ++k) r = checked_mul(r, k);
      return r;
    };
    const Int n = static_cast<Int>(rank);
    switch (family) {
      case Family::A: return fact(n + 1);
      case Family::B:
      case Family::C: return checked_mul(Int(1) << n, fact(n));
      case Family::D: return checked_mul(Int(1) << (n - 1), fact(n));
      case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
      case Family::F: return 1152;
      case Family::G: return 12;
    }
    return 0;
  }

  void require(const Weight& w) const {
    if (w.family() != family || w.rank() != rank)
      throw InvalidInput("weight of type " + std::string(1, family_char(w.family())) +
                         std::to_string(w.rank()) + " used with root datum " + name());
  }
};

inline bool is_supported(Family family, std::size_t rank) {
  switch (family) {
    case Family::A: return rank >= 1 && rank <= Weight::kMaxRank;
    case Family::B:
    case Family::C: return rank >= 2 && rank <= Weight::kMaxRank;
    case Family::D: return rank >= 4 && rank <= Weight::kMaxRank;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

inline const char* kSupportedRanges =
    "supported types: A1-A8, B2-B8, C2-C8, D4-D8, E6, E7, E8, F4, G2";

inline std::optional<Family> family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default: return std::nullopt;
  }
}

namespace detail {

inline IntMatrix cartan_matrix(Family family, std::size_t n) {
  IntMatrix c(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  auto simple_edge = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  // bond of multiplicity r between a long and a short simple root
  auto multiple_edge = [&](std::size_t long_root, std::size_t short_root, Int r) {
    c[short_root][long_root] = -r;  // <alpha_long, alpha_short^v>
    c[long_root][short_root] = -1;
  };
  switch (family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) simple_edge(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      multiple_edge(n - 2, n - 1, 2);
      break;
    case Family::C:
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      multiple_edge(n - 1, n - 2, 2);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      simple_edge(n - 3, n - 1);
      break;
    case Family::E:
      simple_edge(0, 2);
      simple_edge(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) simple_edge(i, i + 1);
      break;
    case Family::F:
      simple_edge(0, 1);
      multiple_edge(1, 2, 2);
      simple_edge(2, 3);
      break;
    case Family::G:
      multiple_edge(1, 0, 3);
      break;
  }
  return c;
}

// (alpha_i, alpha_i)/2 with short roots normalized to 1.
inline IntVector symmetrizer(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || d[j] != Rational(0)) continue;
      // C[j][i] d_j = C[i][j] d_i
      d[j] = d[i] * Rational(c[i][j], c[j][i]);
      stack.push_back(j);
    }
  }
  const Rational mn = *std::min_element(d.begin(), d.end());
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational q = d[i] / mn;
    if (q.denominator() != 1) throw InternalError("non-integral symmetrizer");
    out[i] = q.numerator();
  }
  return out;
}

inline std::vector<std::vector<Rational>> epsilon_matrix(Family family, std::size_t n) {
  const std::size_t dim = family == Family::A ? n + 1 : n;
  std::vector<std::vector<Rational>> e(dim, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= i; ++k) e[k][i] = 1;
  const Rational half(1, 2);
  if (family == Family::B) {
    for (std::size_t k = 0; k < n; ++k) e[k][n - 1] = half;
  } else if (family == Family::D) {
    for (std::size_t k = 0; k < n; ++k) {
      e[k][n - 2] = k + 1 == n ? -half : half;
      e[k][n - 1] = half;
    }
  }
  return e;
}

}  // namespace detail

/// Builds the root datum of the given type. Deterministic.
inline RootDatum build_root_datum(Family family, std::size_t rank) {
  if (!is_supported(family, rank))
    throw InvalidInput("unsupported root system " + std::string(1, family_char(family)) +
                       std::to_string(rank) + "; " + kSupportedRanges);
  RootDatum d;
  d.family = family;
  d.rank = rank;
  const std::size_t n = rank;
  d.cartan = detail::cartan_matrix(family, n);
  d.symmetrizer = detail::symmetrizer(d.cartan);

  auto [inv_num, inv_den] = rational_inverse(d.cartan);
  d.inv_cartan_num = inv_num;
  d.inv_cartan_den = inv_den;
  d.height_num.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) d.height_num[j] += inv_num[k][j];

  // (mu, nu) = mu^T diag(symmetrizer) C^{-1} nu
  d.form_num.assign(n, IntVector(n, 0));
  Int g = inv_den;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.form_num[i][j] = d.symmetrizer[i] * inv_num[i][j];
      g = std::gcd(g, d.form_num[i][j]);
    }
  for (auto& row : d.form_num)
    for (auto& x : row) x /= g;
  d.form_den = inv_den / g;

  for (std::size_t j = 0; j < n; ++j) {
    Weight a(family, n);
    for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<int>(d.cartan[i][j]);
    d.simple_roots.push_back(a);
  }

  // Positive roots by height using root strings:
  // beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0, where p is the
  // largest k with beta - k alpha_i a root.
  std::set<IntVector> all;
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    all.insert(e);
  }
  std::vector<IntVector> ordered;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<IntVector> next;
    for (const auto& beta : layer) {
      ordered.push_back(beta);
      for (std::size_t i = 0; i < n; ++i) {
        Int pairing = 0;  // <beta, alpha_i^v>
        for (std::size_t k = 0; k < n; ++k) pairing += d.cartan[i][k] * beta[k];
        Int p = 0;
        IntVector down = beta;
        for (;;) {
          down[i] -= 1;
          if (!all.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          IntVector up = beta;
          up[i] += 1;
          if (all.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  for (const auto& c : ordered) {
    Weight w(family, n);
    for (std::size_t i = 0; i < n; ++i) {
      Int s = 0;
      for (std::size_t k = 0; k < n; ++k) s += d.cartan[i][k] * c[k];
      w[i] = static_cast<int>(s);
    }
    d.positive_roots.push_back(w);
    d.positive_root_coeffs.push_back(c);
    IntVector gf(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gf[i] += d.form_num[i][j] * w[j];
    d.positive_root_form.push_back(gf);
  }
  Int short_len = -1;
  std::vector<Int> lens;
  for (const auto& w : d.positive_roots) {
    const Int len = d.form_scaled(w, w);
    lens.push_back(len);
    if (short_len < 0 || len < short_len) short_len = len;
  }
  for (Int len : lens) d.positive_root_is_short.push_back(len == short_len);

  d.rho = d.zero();
  for (std::size_t i = 0; i < n; ++i) d.rho[i] = 1;
  // roots are ordered by height, so the last one is the highest root
  d.highest_root = d.positive_roots.back();
  for (std::size_t k = d.positive_roots.size(); k-- > 0;)
    if (d.positive_root_is_short[k]) {
      d.highest_short_root = d.positive_roots[k];
      break;
    }
  if (is_classical(family)) d.epsilon_map = detail::epsilon_matrix(family, n);
  return d;
}

/// Shared immutable instance per type; safe for concurrent callers.
inline const RootDatum& root_datum(Family family, std::size_t rank) {
  static std::mutex mu;
  static std::map<std::pair<char, std::size_t>, std::unique_ptr<const RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(family_char(family), rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<const RootDatum>(build_root_datum(family, rank))).first;
  return *it->second;
}

inline const RootDatum& root_datum_of(const Weight& w) { return root_datum(w.family(), w.rank()); }

/// The prime threshold e(G) for Premet weight sets: 1 for A/D/E, 2 for B/C/F, 3 for G.
inline int e_constant(const RootDatum& d) {
  switch (d.family) {
    case Family::B:
    case Family::C:
    case Family::F: return 2;
    case Family::G: return 3;
    default: return 1;
  }
}

/// Bourbaki epsilon-coordinates of a weight (classical types only). For A_n
/// the representative with last coordinate 0 is returned.
inline std::vector<Rational> epsilon_values(const RootDatum& d, const Weight& mu) {
  d.require(mu);
  if (!d.epsilon_map)
    throw InvalidInput("epsilon coordinates are only defined for types A-D, not " + d.name());
  const auto& e = *d.epsilon_map;
  std::vector<Rational> out(e.size(), Rational(0));
  for (std::size_t k = 0; k < e.size(); ++k)
    for (std::size_t i = 0; i < d.rank; ++i) out[k] += e[k][i] * mu[i];
  return out;
}

/// Inverse of epsilon_values: mu_i = <x, alpha_i^v> in the standard realization.
inline Weight weight_from_epsilon(const RootDatum& d, std::span<const Rational> x) {
  if (!d.epsilon_map)
    throw InvalidInput("epsilon coordinates are only defined for types A-D, not " + d.name());
  const std::size_t n = d.rank;
  const std::size_t dim = d.family == Family::A ? n + 1 : n;
  if (x.size() != dim)
    throw InvalidInput(d.name() + " expects " + std::to_string(dim) + " epsilon coordinates");
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i + 1 < n; ++i) c[i] = x[i] - x[i + 1];
  switch (d.family) {
    case Family::A: c[n - 1] = x[n - 1] - x[n]; break;
    case Family::B: c[n - 1] = 2 * x[n - 1]; break;
    case Family::C: c[n - 1] = x[n - 1]; break;
    case Family::D: c[n - 1] = x[n - 2] + x[n - 1]; break;
    default: break;
  }
  Weight w = d.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].denominator() != 1) throw InvalidInput("epsilon vector is not in the weight lattice");
    w[i] = static_cast<int>(c[i].numerator());
  }
  return w;
}

/// Parses a type name such as "C3".
inline const RootDatum& parse_group(std::string_view text) {
  if (text.size() < 2) throw InvalidInput("malformed group '" + std::string(text) + "'; expected e.g. C3");
  auto fam = family_from_char(text[0]);
  if (!fam) throw InvalidInput("unknown family '" + std::string(1, text[0]) + "' in group '" + std::string(text) + "'");
  std::size_t rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw InvalidInput("malformed rank in group '" + std::string(text) + "' at position " + std::to_string(i));
    rank = rank * 10 + static_cast<std::size_t>(text[i] - '0');
    if (rank > 1000) break;
  }
  return root_datum(*fam, rank);
}

/// "[c1,...,cn]"
inline std::string format_coords(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

/// "FAMILYRANK:[c1,...,cn]", e.g. "C3:[0,1,0]".
inline std::string format_weight(const Weight& w) {
  return std::string(1, family_char(w.family())) + std::to_string(w.rank()) + ":" + format_coords(w);
}

/// Parses "[c1,...,cn]" for the given datum, or "FAMILYRANK:[...]" (which
/// must then name the same datum). Errors report the offending position.
inline Weight parse_weight(const RootDatum& d, std::string_view text) {
  const std::string src(text);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> Weight {
    throw InvalidInput("malformed weight '" + src + "' at position " + std::to_string(pos) + ": " + msg);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] != '[') {
    const std::size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos) return fail("expected '[' or a FAMILYRANK: prefix");
    std::string_view prefix = text.substr(pos, colon - pos);
    while (!prefix.empty() && prefix.back() == ' ') prefix.remove_suffix(1);
    const RootDatum& named = parse_group(prefix);
    if (named.family != d.family || named.rank != d.rank)
      throw InvalidInput("weight '" + src + "' names " + named.name() + " but the group is " + d.name());
    pos = colon + 1;
    skip_ws();
  }
  if (pos >= text.size() || text[pos] != '[') return fail("expected '['");
  ++pos;
  std::vector<int> coords;
  for (;;) {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    long long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) return fail("coordinate too large");
      ++pos;
    }
    if (pos == digits) {
      if (coords.empty() && pos < text.size() && text[pos] == ']' && start == pos) return fail("empty weight");
      return fail("expected an integer");
    }
    coords.push_back(static_cast<int>(text[start] == '-' ? -v : v));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    return fail("expected ',' or ']'");
  }
  skip_ws();
  if (pos != text.size()) return fail("trailing characters");
  if (coords.size() != d.rank)
    throw InvalidInput("weight '" + src + "' has " + std::to_string(coords.size()) + " coordinates; " +
                       d.name() + " needs " + std::to_string(d.rank));
  return Weight(d.family, coords);
}

}  // namespace torspec
