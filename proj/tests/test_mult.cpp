#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace torspec;

namespace {

std::set<std::vector<int>> support(const WeightMultiset& ms) {
  std::set<std::vector<int>> out;
  for (const auto& [w, m] : ms.entries) out.insert(std::vector<int>(w.coords().begin(), w.coords().end()));
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<Weight>& ws) {
  std::set<std::vector<int>> out;
  for (const Weight& w : ws) out.insert(std::vector<int>(w.coords().begin(), w.coords().end()));
  return out;
}

}  // namespace

TEST(Multiplicities, TypeAAgreesWithKostkaNumbers) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const RootDatum& d = root_datum(Family::A, n);
    for (const Weight& lambda : dominant_weights_up_to_dimension(d, n == 3 ? 64 : 100)) {
      SCOPED_TRACE(format_weight(lambda));
      const WeightMultiset ms = freudenthal_multiplicities(lambda);
      const auto shape = oracle::partition_of(lambda);
      const int total = std::accumulate(shape.begin(), shape.end(), 0);
      // every weight the library reports has the Kostka multiplicity
      for (const auto& [mu, m] : ms.entries) {
        const auto content = oracle::content_of(mu, total);
        ASSERT_TRUE(content.has_value());
        EXPECT_EQ(m, oracle::kostka(shape, *content)) << format_coords(mu);
      }
      // and every content with a tableau is a reported weight
      Int count = 0;
      for (const auto& content : oracle::compositions(total, n + 1)) {
        const Int k = oracle::kostka(shape, content);
        if (k == 0) continue;
        Weight mu = d.zero();
        for (std::size_t i = 0; i < n; ++i) mu[i] = content[i] - content[i + 1];
        EXPECT_EQ(ms.multiplicity(mu), k) << format_coords(mu);
        count += k;
      }
      EXPECT_EQ(count, ms.dim);
    }
  }
}

TEST(Multiplicities, Examples) {
  const RootDatum& a2 = root_datum(Family::A, 2);
  const WeightMultiset adj = freudenthal_multiplicities(a2.weight({1, 1}));
  EXPECT_EQ(adj.dim, 8);
  EXPECT_EQ(adj.entries.size(), 7u);
  EXPECT_EQ(adj.multiplicity(a2.zero()), 2);
  for (const Weight& r : a2.positive_roots) {
    EXPECT_EQ(adj.multiplicity(r), 1);
    EXPECT_EQ(adj.multiplicity(-r), 1);
  }
  const RootDatum& a1 = root_datum(Family::A, 1);
  EXPECT_EQ(support(freudenthal_multiplicities(a1.weight({2}))), (std::set<std::vector<int>>{{2}, {0}, {-2}}));
  const RootDatum& c2 = root_datum(Family::C, 2);
  const WeightMultiset v5 = freudenthal_multiplicities(c2.omega(1));
  EXPECT_EQ(v5.dim, 5);
  EXPECT_EQ(v5.multiplicity(c2.zero()), 1);
  const RootDatum& b3 = root_datum(Family::B, 3);
  EXPECT_EQ(zero_weight_multiplicity(b3.omega(1)), 3);
  EXPECT_EQ(zero_weight_multiplicity(b3.omega(2)), 0);
  EXPECT_EQ(weyl_dimension(b3.omega(0)), BigInt(7));
  EXPECT_EQ(weyl_dimension(b3.omega(1)), BigInt(21));
  EXPECT_EQ(weyl_dimension(root_datum(Family::A, 3).omega(1)), BigInt(6));
  EXPECT_EQ(weyl_dimension(root_datum(Family::D, 4).omega(3)), BigInt(8));
  EXPECT_EQ(weyl_dimension(root_datum(Family::G, 2).omega(0)), BigInt(7));
  EXPECT_EQ(weyl_dimension(root_datum(Family::F, 4).omega(3)), BigInt(26));
  EXPECT_EQ(weyl_dimension(root_datum(Family::E, 8).omega(7)), BigInt(248));
  EXPECT_EQ(weyl_dimension(root_datum(Family::E, 8).omega(3)), BigInt(6899079264LL));
  EXPECT_EQ(weyl_dimension(root_datum(Family::E, 6).omega(0)), BigInt(27));
  EXPECT_EQ(weyl_dimension(root_datum(Family::E, 7).omega(6)), BigInt(56));
}

TEST(Multiplicities, PremetSetExamples) {
  const RootDatum& a2 = root_datum(Family::A, 2);
  EXPECT_EQ(premet_weight_set(a2.weight({1, 1})).size(), 7u);
  const RootDatum& b3 = root_datum(Family::B, 3);
  EXPECT_EQ(premet_weight_set(b3.omega(2)).size(), 8u);
  EXPECT_EQ(premet_weight_set(b3.zero()).size(), 1u);
}

TEST(Multiplicities, EngineSelfConsistency) {
  const std::vector<std::pair<Family, std::size_t>> groups{{Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
                                                           {Family::C, 3}, {Family::D, 4}, {Family::G, 2}};
  for (const auto& [f, n] : groups) {
    const RootDatum& d = root_datum(f, n);
    for (const Weight& lambda : dominant_weights_up_to_dimension(d, 300)) {
      SCOPED_TRACE(format_weight(lambda));
      const WeightMultiset ms = freudenthal_multiplicities(lambda);
      EXPECT_EQ(BigInt(ms.dim), weyl_dimension(lambda));
      EXPECT_EQ(support(ms), as_set(premet_weight_set(lambda)));
      // W-invariance on a few reflections
      for (const auto& [mu, m] : ms.entries)
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(ms.multiplicity(reflect(mu, i)), m);
    }
  }
}

TEST(Multiplicities, WeightSetsAreMonotoneAndAdditive) {
  for (const auto& [f, n] : std::vector<std::pair<Family, std::size_t>>{{Family::A, 2}, {Family::B, 2}, {Family::G, 2}, {Family::A, 3}}) {
    const RootDatum& d = root_datum(f, n);
    const auto ws = dominant_weights_up_to_dimension(d, 64);
    for (const Weight& lambda : ws)
      for (const Weight& mu : ws) {
        const auto sl = as_set(premet_weight_set(lambda)), sm = as_set(premet_weight_set(mu));
        if (precedes(mu, lambda)) EXPECT_TRUE(std::includes(sl.begin(), sl.end(), sm.begin(), sm.end()));
        if (lambda.coordinate_sum() + mu.coordinate_sum() > 4) continue;
        std::set<std::vector<int>> sums;
        for (const Weight& x : premet_weight_set(lambda))
          for (const Weight& y : premet_weight_set(mu)) {
            const Weight z = x + y;
            sums.insert(std::vector<int>(z.coords().begin(), z.coords().end()));
          }
        EXPECT_EQ(as_set(premet_weight_set(lambda + mu)), sums) << format_weight(lambda) << " + " << format_weight(mu);
      }
  }
}

TEST(Multiplicities, LimitsAreEnforced) {
  const RootDatum& e8 = root_datum(Family::E, 8);
  Limits tight;
  tight.dimension_bound = 1000;
  EXPECT_THROW(freudenthal_multiplicities(e8.omega(0), tight), ResourceLimit);
  Limits orbit;
  orbit.orbit_bound = 10;
  EXPECT_THROW(premet_weight_set(root_datum(Family::A, 3).weight({1, 1, 1}), orbit.orbit_bound), ResourceLimit);
}

TEST(Multiplicities, DimensionEnumerationIsComplete) {
  const RootDatum& b3 = root_datum(Family::B, 3);
  const auto ws = dominant_weights_up_to_dimension(b3, 40);
  std::vector<Int> dims;
  for (const Weight& w : ws) dims.push_back(weyl_dimension_int(w));
  EXPECT_EQ(dims, (std::vector<Int>{1, 7, 8, 21, 27, 35}));
  EXPECT_TRUE(std::is_sorted(dims.begin(), dims.end()));
}

TEST(Multiplicities, CacheReturnsSameObject) {
  const Weight w = root_datum(Family::C, 3).weight({1, 1, 0});
  EXPECT_EQ(cached_multiplicities(w).get(), cached_multiplicities(w).get());
}
