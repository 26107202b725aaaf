#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "torspec/weights.hpp"

namespace torspec {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr const char* kValidityBanner =
    "weight set valid for p=0 or p>e(G); multiplicities are characteristic-0 values";

inline constexpr Int kDefaultDimensionBound = 5'000'000;

struct Limits {
  std::size_t orbit_bound = kDefaultOrbitBound;
  Int dimension_bound = kDefaultDimensionBound;
};

/// Weights of V_lambda with characteristic-0 multiplicities.
struct WeightMultiset {
  Weight highest;
  std::vector<std::pair<Weight, Int>> dominant;  // subdominant order, highest first
  std::unordered_map<Weight, Int, WeightHash> entries;
  Int dim = 0;

  Int multiplicity(const Weight& mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? 0 : it->second;
  }

  /// Entries ordered by depth below the highest weight, then
  /// lexicographically descending.
  std::vector<std::pair<Weight, Int>> sorted_entries() const {
    std::vector<std::pair<Weight, Int>> out(entries.begin(), entries.end());
    const RootDatum& d = root_datum_of(highest);
    detail::SubdominantOrder order{&d, highest};
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order(a.first, b.first); });
    return out;
  }

  bool nonzero_weights_multiplicity_free() const {
    return std::all_of(dominant.begin(), dominant.end(),
                       [](const auto& e) { return e.first.is_zero() || e.second == 1; });
  }
};

/// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha)
inline BigInt weyl_dimension(const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidInput("weyl_dimension needs a dominant weight, got " + format_weight(lambda));
  const RootDatum& d = root_datum_of(lambda);
  const Weight lr = lambda + d.rho;
  BigInt num = 1, den = 1;
  for (const auto& gf : d.positive_root_form) {
    Int a = 0, b = 0;
    for (std::size_t i = 0; i < d.rank; ++i) {
      a += gf[i] * lr[i];
      b += gf[i] * d.rho[i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw InternalError("non-integral Weyl dimension for " + format_weight(lambda));
  return num / den;
}

inline Int weyl_dimension_int(const Weight& lambda) {
  const BigInt v = weyl_dimension(lambda);
  if (v > BigInt(std::numeric_limits<Int>::max())) throw ArithmeticOverflow("Weyl dimension exceeds 64 bits");
  return static_cast<Int>(v);
}

/// Union of the W-orbits of all dominant weights below lambda, in the
/// subdominant order (orbit members grouped after their dominant weight).
inline std::vector<Weight> premet_weight_set(const Weight& lambda, std::size_t orbit_bound = kDefaultOrbitBound) {
  std::vector<Weight> out;
  for (const Weight& mu : subdominant_weights(lambda)) {
    auto orbit = weyl_orbit(mu, orbit_bound);
    if (out.size() + orbit.size() > orbit_bound)
      throw ResourceLimit("weight set of " + format_weight(lambda) + " exceeds the orbit bound " +
                          std::to_string(orbit_bound));
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  return out;
}

/// Multiplicities on dominant weights only, by Freudenthal's recursion:
///   ((l+rho, l+rho) - (mu+rho, mu+rho)) m(mu) = 2 sum_{a>0} sum_{k>=1} m(mu+ka) (mu+ka, a).
inline std::vector<std::pair<Weight, Int>> dominant_multiplicities(const Weight& lambda) {
  const RootDatum& d = root_datum_of(lambda);
  const auto dom = subdominant_weights(lambda);
  std::unordered_map<Weight, Int, WeightHash> m;
  m.reserve(dom.size() * 2);
  m.emplace(lambda, 1);
  const Weight lr = lambda + d.rho;
  const Int top_norm = d.form_scaled(lr, lr);
  std::vector<std::pair<Weight, Int>> out{{lambda, 1}};
  for (std::size_t idx = 1; idx < dom.size(); ++idx) {
    const Weight& mu = dom[idx];
    Int sum = 0;
    for (std::size_t a = 0; a < d.positive_roots.size(); ++a) {
      const Weight& alpha = d.positive_roots[a];
      const IntVector& gf = d.positive_root_form[a];
      Weight nu = mu;
      for (;;) {
        nu += alpha;
        // every dominant weight above mu was handled earlier; a miss means
        // nu is not a weight and neither is anything further along the string
        auto it = m.find(dominant_of(nu));
        if (it == m.end()) break;
        Int pairing = 0;
        for (std::size_t i = 0; i < d.rank; ++i) pairing += gf[i] * nu[i];
        sum = checked_add(sum, checked_mul(it->second, pairing));
      }
    }
    const Weight mr = mu + d.rho;
    const Int gap = top_norm - d.form_scaled(mr, mr);
    if (gap <= 0) throw InternalError("nonpositive Freudenthal denominator at " + format_weight(mu));
    const Int numer = checked_mul(2, sum);
    if (numer % gap != 0) throw InternalError("non-integral Freudenthal quotient at " + format_weight(mu));
    const Int mult = numer / gap;
    if (mult <= 0) throw InternalError("nonpositive multiplicity at " + format_weight(mu));
    m.emplace(mu, mult);
    out.emplace_back(mu, mult);
  }
  return out;
}

/// Full weight multiset of V_lambda (characteristic 0).
inline WeightMultiset freudenthal_multiplicities(const Weight& lambda, const Limits& limits = {}) {
  if (!lambda.is_dominant())
    throw InvalidInput("freudenthal_multiplicities needs a dominant weight, got " + format_weight(lambda));
  const BigInt dim = weyl_dimension(lambda);
  if (dim > BigInt(limits.dimension_bound))
    throw ResourceLimit("dimension of V_" + format_weight(lambda) + " is " + dim.str() +
                        ", above the dimension bound " + std::to_string(limits.dimension_bound));
  WeightMultiset ms;
  ms.highest = lambda;
  ms.dominant = dominant_multiplicities(lambda);
  std::size_t count = 0;
  for (const auto& [mu, mult] : ms.dominant) {
    const auto orbit = weyl_orbit(mu, limits.orbit_bound);
    count += orbit.size();
    if (count > limits.orbit_bound)
      throw ResourceLimit("weight set of " + format_weight(lambda) + " exceeds the orbit bound " +
                          std::to_string(limits.orbit_bound));
    for (const Weight& w : orbit) ms.entries.emplace(w, mult);
    ms.dim = checked_add(ms.dim, checked_mul(mult, static_cast<Int>(orbit.size())));
  }
  return ms;
}

/// Memoized freudenthal_multiplicities; the result is shared and immutable.
inline std::shared_ptr<const WeightMultiset> cached_multiplicities(const Weight& lambda, const Limits& limits = {}) {
  static std::mutex mu;
  static std::unordered_map<Weight, std::shared_ptr<const WeightMultiset>, WeightHash> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) {
      if (it->second->dim > limits.dimension_bound)
        throw ResourceLimit("dimension of V_" + format_weight(lambda) + " is above the dimension bound " +
                            std::to_string(limits.dimension_bound));
      return it->second;
    }
  }
  auto ms = std::make_shared<const WeightMultiset>(freudenthal_multiplicities(lambda, limits));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(lambda, ms).first->second;
}

inline Int zero_weight_multiplicity(const Weight& lambda) {
  if (!lambda.is_dominant())
    throw InvalidInput("zero_weight_multiplicity needs a dominant weight, got " + format_weight(lambda));
  if (!is_radical(lambda)) return 0;
  for (const auto& [mu, mult] : dominant_multiplicities(lambda))
    if (mu.is_zero()) return mult;
  return 0;
}

/// All dominant lambda with weyl_dimension(lambda) <= bound, ordered by
/// dimension and then lexicographically. Dimension strictly grows when a
/// fundamental weight is added, so a search upward from 0 is complete.
inline std::vector<Weight> dominant_weights_up_to_dimension(const RootDatum& d, Int bound) {
  std::vector<std::pair<Int, Weight>> found;
  std::unordered_set<Weight, WeightHash> seen;
  std::vector<Weight> queue{d.zero()};
  seen.insert(d.zero());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Weight w = queue[head];
    const BigInt dim = weyl_dimension(w);
    if (dim > BigInt(bound)) continue;
    found.emplace_back(static_cast<Int>(dim), w);
    for (std::size_t i = 0; i < d.rank; ++i) {
      Weight up = w;
      up[i] += 1;
      if (seen.insert(up).second) queue.push_back(up);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return lex_less(a.second, b.second);
  });
  std::vector<Weight> out;
  for (auto& [dim, w] : found) out.push_back(w);
  return out;
}

}  // namespace torspec
