#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "torspec/rootdata.hpp"

namespace torspec {

enum class Dominance { Equal, FirstSucceeds, SecondSucceeds, Incomparable };

struct LevelAssignment {
  Weight weight;
  int level = 1;
};

inline constexpr std::size_t kDefaultOrbitBound = 10'000'000;

/// Coordinates of `w` in the basis of simple roots, or nullopt if w is not
/// in the root lattice.
inline std::optional<IntVector> root_coordinates(const Weight& w) {
  const RootDatum& d = root_datum_of(w);
  IntVector c(d.rank, 0);
  for (std::size_t k = 0; k < d.rank; ++k) {
    Int s = 0;
    for (std::size_t j = 0; j < d.rank; ++j) s += d.inv_cartan_num[k][j] * w[j];
    if (s % d.inv_cartan_den != 0) return std::nullopt;
    c[k] = s / d.inv_cartan_den;
  }
  return c;
}

/// Height of a radical weight (sum of its simple-root coordinates).
inline Int height(const Weight& w) {
  const auto c = root_coordinates(w);
  if (!c) throw InvalidInput("height is only defined for radical weights; got " + format_weight(w));
  Int h = 0;
  for (Int x : *c) h += x;
  return h;
}

inline Dominance dominance_compare(const Weight& lambda, const Weight& mu) {
  if (!lambda.same_type(mu))
    throw InvalidInput("cannot compare " + format_weight(lambda) + " with " + format_weight(mu));
  const auto c = root_coordinates(lambda - mu);
  if (!c) return Dominance::Incomparable;
  const bool nonneg = std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
  const bool nonpos = std::all_of(c->begin(), c->end(), [](Int x) { return x <= 0; });
  if (nonneg && nonpos) return Dominance::Equal;
  if (nonneg) return Dominance::FirstSucceeds;
  if (nonpos) return Dominance::SecondSucceeds;
  return Dominance::Incomparable;
}

/// mu strictly below lambda in the dominance order.
inline bool precedes(const Weight& mu, const Weight& lambda) {
  return dominance_compare(lambda, mu) == Dominance::FirstSucceeds;
}

inline bool is_radical(const Weight& mu) { return root_coordinates(mu).has_value(); }

/// s_i(v) = v - <v, alpha_i^v> alpha_i
inline Weight reflect(const Weight& v, std::size_t i) {
  const RootDatum& d = root_datum_of(v);
  Weight out = v;
  const int c = v[i];
  if (c == 0) return out;
  for (std::size_t k = 0; k < d.rank; ++k) out[k] -= c * static_cast<int>(d.cartan[k][i]);
  return out;
}

/// The dominant weight of W.mu, and the word (reflection indices, applied
/// left to right) that carries mu to it.
inline std::pair<Weight, std::vector<std::size_t>> dominant_representative(const Weight& mu) {
  Weight v = mu;
  std::vector<std::size_t> word;
  for (;;) {
    std::size_t i = 0;
    while (i < v.rank() && v[i] >= 0) ++i;
    if (i == v.rank()) break;
    v = reflect(v, i);
    word.push_back(i);
  }
  return {v, word};
}

inline Weight dominant_of(const Weight& mu) {
  const RootDatum& d = root_datum_of(mu);
  Weight v = mu;
  for (;;) {
    std::size_t i = 0;
    while (i < v.rank() && v[i] >= 0) ++i;
    if (i == v.rank()) return v;
    const int c = v[i];
    for (std::size_t k = 0; k < d.rank; ++k) v[k] -= c * static_cast<int>(d.cartan[k][i]);
  }
}

/// Full W-orbit of mu. Generated layer by layer from the dominant member:
/// reflecting only in simple roots with positive pairing moves strictly
/// down the orbit, so each layer is deduplicated on its own.
inline std::vector<Weight> weyl_orbit(const Weight& mu, std::size_t bound = kDefaultOrbitBound) {
  const Weight top = dominant_of(mu);
  std::vector<Weight> orbit{top};
  std::vector<Weight> layer{top};
  std::unordered_set<Weight, WeightHash> next_set;
  while (!layer.empty()) {
    next_set.clear();
    std::vector<Weight> next;
    for (const Weight& v : layer)
      for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v[i] <= 0) continue;
        Weight r = reflect(v, i);
        if (next_set.insert(r).second) next.push_back(r);
      }
    if (orbit.size() + next.size() > bound)
      throw ResourceLimit("Weyl orbit of " + format_weight(mu) + " exceeds the orbit bound " + std::to_string(bound));
    orbit.insert(orbit.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return orbit;
}

namespace detail {

// depth below lambda, then lexicographically descending
struct SubdominantOrder {
  const RootDatum* d;
  Weight top;
  Int depth(const Weight& w) const {
    Int s = 0;
    const Weight diff = top - w;
    for (std::size_t j = 0; j < d->rank; ++j) s += d->height_num[j] * diff[j];
    return s / d->inv_cartan_den;
  }
  bool operator()(const Weight& a, const Weight& b) const {
    const Int da = depth(a), db = depth(b);
    if (da != db) return da < db;
    return lex_less(b, a);
  }
};

}  // namespace detail

/// All dominant mu with mu <= lambda, lambda first, ordered by depth below
/// lambda and then lexicographically descending. Every dominant weight
/// below lambda is reachable from lambda by subtracting one positive root
/// at a time through dominant weights, so the search stays in the dominant
/// chamber.
inline std::vector<Weight> subdominant_weights(const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidInput("subdominant_weights needs a dominant weight, got " + format_weight(lambda));
  const RootDatum& d = root_datum_of(lambda);
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<Weight> out{lambda};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Weight mu = out[head];
    for (const Weight& alpha : d.positive_roots) {
      Weight nu = mu - alpha;
      if (nu.is_dominant() && seen.insert(nu).second) out.push_back(nu);
    }
  }
  std::sort(out.begin(), out.end(), detail::SubdominantOrder{&d, lambda});
  return out;
}

/// The minimal nonzero elements (an antichain) of the proper subdominant
/// set of lambda. Empty when lambda has no nonzero proper subdominant.
inline std::vector<Weight> minimal_nonzero_subdominant(const Weight& lambda) {
  if (lambda.is_zero()) throw InvalidInput("minimal_nonzero_subdominant is undefined for the zero weight");
  const auto sub = subdominant_weights(lambda);
  std::vector<Weight> cand;
  for (const Weight& w : sub)
    if (!w.is_zero() && !(w == lambda)) cand.push_back(w);
  std::vector<Weight> out;
  for (const Weight& w : cand) {
    bool minimal = true;
    for (const Weight& v : cand)
      if (precedes(v, w)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), WeightLexLess{});
  return out;
}

namespace detail {

class LevelMemo {
 public:
  std::optional<int> find(const Weight& w) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(w);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Weight& w, int level) {
    std::unique_lock lock(mu_);
    map_.emplace(w, level);
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Weight, int, WeightHash> map_;
};

inline LevelMemo& level_memo() {
  static LevelMemo memo;
  return memo;
}

}  // namespace detail

/// Length of the longest chain of dominant weights ending at lambda
/// (level 1 for minuscule weights and 0).
inline int weight_level(const Weight& lambda) {
  if (!lambda.is_dominant()) throw InvalidInput("weight_level needs a dominant weight, got " + format_weight(lambda));
  auto& memo = detail::level_memo();
  if (auto hit = memo.find(lambda)) return *hit;
  const RootDatum& d = root_datum_of(lambda);
  int best = 0;
  // a longest chain can be refined to steps of single positive roots
  for (const Weight& alpha : d.positive_roots) {
    const Weight nu = lambda - alpha;
    if (nu.is_dominant()) best = std::max(best, weight_level(nu));
  }
  memo.store(lambda, best + 1);
  return best + 1;
}

inline bool is_minuscule(const Weight& lambda) {
  return lambda.is_dominant() && !lambda.is_zero() && weight_level(lambda) == 1;
}

/// Every dominant weight with coordinate sum at most `height_bound` whose
/// level is at most `max_level`, ordered by level, coordinate sum, and then
/// lexicographically descending.
inline std::vector<LevelAssignment> level_sets(const RootDatum& d, int max_level, int height_bound) {
  if (max_level < 1) throw InvalidInput("max_level must be at least 1");
  if (height_bound < 0) throw InvalidInput("height bound must be nonnegative");
  std::vector<LevelAssignment> out;
  Weight w = d.zero();
  // enumerate compositions with coordinate sum <= height_bound
  auto rec = [&](auto& self, std::size_t i, int remaining) -> void {
    if (i == d.rank) {
      const int lv = weight_level(w);
      if (lv <= max_level) out.push_back({w, lv});
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      w[i] = c;
      self(self, i + 1, remaining - c);
    }
    w[i] = 0;
  };
  rec(rec, 0, height_bound);
  std::sort(out.begin(), out.end(), [](const LevelAssignment& a, const LevelAssignment& b) {
    if (a.level != b.level) return a.level < b.level;
    const int sa = a.weight.coordinate_sum(), sb = b.weight.coordinate_sum();
    if (sa != sb) return sa < sb;
    return lex_less(b.weight, a.weight);
  });
  return out;
}

}  // namespace torspec
