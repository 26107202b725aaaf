#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace torspec;

namespace {

struct TypeCase {
  Family family;
  std::size_t rank;
};

std::vector<TypeCase> all_types() {
  std::vector<TypeCase> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (std::size_t n = 2; n <= 8; ++n) out.push_back({Family::B, n});
  for (std::size_t n = 2; n <= 8; ++n) out.push_back({Family::C, n});
  for (std::size_t n = 4; n <= 8; ++n) out.push_back({Family::D, n});
  out.insert(out.end(), {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}});
  return out;
}

std::size_t expected_positive_roots(Family f, std::size_t n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

Int expected_determinant(Family f, std::size_t n) {
  switch (f) {
    case Family::A: return static_cast<Int>(n + 1);
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return static_cast<Int>(9 - n);
    default: return 1;
  }
}

}  // namespace

TEST(IntMath, CheckedArithmeticThrowsOnOverflow) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(checked_add(big, 1), ArithmeticOverflow);
  EXPECT_THROW(checked_mul(big / 2 + 1, 2), ArithmeticOverflow);
  EXPECT_THROW(checked_sub(std::numeric_limits<Int>::min(), 1), ArithmeticOverflow);
  EXPECT_EQ(checked_mul(-3, 7), -21);
  EXPECT_EQ(floor_mod(-7, 3), 2);
  EXPECT_EQ(mod_one(Rational(-1, 4)), Rational(3, 4));
  EXPECT_EQ(mod_one(Rational(5, 2)), Rational(1, 2));
}

TEST(IntMath, SmithFormOnRandomMatrices) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 4;
    IntMatrix a(rows, IntVector(cols));
    for (auto& r : a)
      for (auto& x : r) x = entry(rng);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(multiply(multiply(s.U, a), s.V), s.D);
    EXPECT_EQ(std::abs(oracle::determinant(s.U).numerator()), 1);
    EXPECT_EQ(std::abs(oracle::determinant(s.V).numerator()), 1);
    std::vector<oracle::RVec> rrows;
    for (const auto& r : a) {
      oracle::RVec v;
      for (Int x : r) v.push_back(Rational(x));
      rrows.push_back(v);
    }
    EXPECT_EQ(s.rank, oracle::rank_of(rrows));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) EXPECT_EQ(s.D[i][j], 0);
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) EXPECT_EQ(s.invariants[i + 1] % s.invariants[i], 0);
    for (Int d : s.invariants) EXPECT_GT(d, 0);
  }
}

TEST(IntMath, HermiteFormDecidesLatticeMembership) {
  const IntMatrix gens{{2, 4, 0}, {0, 6, 3}};
  const IntMatrix h = hermite_normal_form(gens);
  EXPECT_TRUE(in_row_lattice(h, {2, 10, 3}));
  EXPECT_TRUE(in_row_lattice(h, {4, 2, -3}));
  EXPECT_FALSE(in_row_lattice(h, {1, 2, 0}));
  EXPECT_FALSE(in_row_lattice(h, {0, 2, 1}));
  EXPECT_EQ(hermite_normal_form(IntMatrix{{4, 6}, {6, 9}}), hermite_normal_form(IntMatrix{{2, 3}}));
}

TEST(IntMath, RationalInverse) {
  const IntMatrix c = root_datum(Family::A, 3).cartan;
  const auto [num, den] = rational_inverse(c);
  const IntMatrix prod = multiply(c, num);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(prod[i][j], i == j ? den : 0);
}

TEST(RootData, CountsDeterminantsAndWeylOrders) {
  for (const auto& [f, n] : all_types()) {
    const RootDatum& d = root_datum(f, n);
    SCOPED_TRACE(d.name());
    EXPECT_EQ(d.positive_roots.size(), expected_positive_roots(f, n));
    EXPECT_EQ(oracle::determinant(d.cartan), Rational(expected_determinant(f, n)));
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(d.cartan[i][i], 2);
  }
  EXPECT_EQ(root_datum(Family::G, 2).weyl_group_order(), 12);
  EXPECT_EQ(root_datum(Family::B, 3).weyl_group_order(), 48);
  EXPECT_EQ(root_datum(Family::D, 4).weyl_group_order(), 192);
  EXPECT_EQ(root_datum(Family::E, 8).weyl_group_order(), 696729600);
}

TEST(RootData, WeylOrderMatchesOrbitOfRegularWeight) {
  for (const auto& [f, n] : std::vector<TypeCase>{{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}}) {
    const RootDatum& d = root_datum(f, n);
    EXPECT_EQ(static_cast<Int>(oracle::orbit_closure(d, d.rho).size()), d.weyl_group_order()) << d.name();
  }
}

TEST(RootData, ClassicalCartanMatchesStandardRealization) {
  for (const auto& [f, n] : all_types()) {
    if (!is_classical(f) || (f == Family::A && n == 1)) continue;
    EXPECT_EQ(root_datum(f, n).cartan, oracle::cartan_from_eps(f, n)) << root_datum(f, n).name();
  }
}

TEST(RootData, ClassicalRootSetsAreBourbaki) {
  for (const auto& [f, n] : all_types()) {
    if (!is_classical(f)) continue;
    const RootDatum& d = root_datum(f, n);
    SCOPED_TRACE(d.name());
    std::set<std::vector<int>> expected, actual;
    for (const auto& r : oracle::roots_eps(f, n)) expected.insert(oracle::omega_coords(f, n, r));
    for (const Weight& r : d.positive_roots) {
      actual.insert(std::vector<int>(r.coords().begin(), r.coords().end()));
      const Weight neg = -r;
      actual.insert(std::vector<int>(neg.coords().begin(), neg.coords().end()));
    }
    EXPECT_EQ(actual, expected);
    // and the epsilon conversion sends each root back to its Bourbaki vector
    std::set<std::vector<Rational>> eps_expected, eps_actual;
    for (const auto& r : oracle::roots_eps(f, n)) {
      auto v = r;
      if (f == Family::A)
        for (auto& x : v) x -= r.back();
      eps_expected.insert(v);
    }
    for (const Weight& r : d.positive_roots) {
      eps_actual.insert(epsilon_values(d, r));
      eps_actual.insert(epsilon_values(d, -r));
    }
    EXPECT_EQ(eps_actual, eps_expected);
  }
}

TEST(RootData, ShortRootsHaveLengthTwoAndFormRecoversCartan) {
  for (const auto& [f, n] : all_types()) {
    const RootDatum& d = root_datum(f, n);
    SCOPED_TRACE(d.name());
    Rational short_len(0), long_len(0);
    for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
      const Rational len = d.form(d.positive_roots[k], d.positive_roots[k]);
      if (d.positive_root_is_short[k]) EXPECT_EQ(len, Rational(2));
      else long_len = len;
      short_len = std::max(short_len, d.positive_root_is_short[k] ? len : Rational(0));
    }
    EXPECT_EQ(short_len, Rational(2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational c = Rational(2) * d.form(d.simple_roots[j], d.simple_roots[i]) / d.form(d.simple_roots[i], d.simple_roots[i]);
        EXPECT_EQ(c, Rational(d.cartan[i][j]));
      }
  }
}

TEST(RootData, HighestRootDominatesEveryPositiveRoot) {
  for (const auto& [f, n] : all_types()) {
    const RootDatum& d = root_datum(f, n);
    for (const Weight& r : d.positive_roots) {
      EXPECT_TRUE(oracle::dominated_or_equal(d, r, d.highest_root)) << d.name() << " " << format_coords(r);
      EXPECT_NE(dominance_compare(d.highest_root, r), Dominance::SecondSucceeds);
    }
    EXPECT_TRUE(d.highest_root.is_dominant());
    EXPECT_TRUE(d.highest_short_root.is_dominant());
  }
}

TEST(RootData, SmallRankFacts) {
  const RootDatum& a1 = root_datum(Family::A, 1);
  EXPECT_EQ(a1.cartan, IntMatrix{{2}});
  ASSERT_EQ(a1.positive_roots.size(), 1u);
  EXPECT_EQ(a1.positive_roots[0], a1.weight({2}));

  const RootDatum& g2 = root_datum(Family::G, 2);
  EXPECT_EQ(g2.highest_root, g2.weight({0, 1}));
  EXPECT_EQ(g2.highest_short_root, g2.weight({1, 0}));

  const RootDatum& c3 = root_datum(Family::C, 3);
  EXPECT_EQ(c3.highest_root, c3.weight({2, 0, 0}));
  EXPECT_EQ(epsilon_values(c3, c3.highest_root), (std::vector<Rational>{Rational(2), Rational(0), Rational(0)}));
  EXPECT_EQ(c3.highest_short_root, c3.weight({0, 1, 0}));

  EXPECT_EQ(e_constant(root_datum(Family::A, 5)), 1);
  EXPECT_EQ(e_constant(root_datum(Family::F, 4)), 2);
  EXPECT_EQ(e_constant(root_datum(Family::G, 2)), 3);
}

TEST(RootData, EpsilonValues) {
  const RootDatum& c2 = root_datum(Family::C, 2);
  EXPECT_EQ(epsilon_values(c2, c2.omega(1)), (std::vector<Rational>{Rational(1), Rational(1)}));
  const RootDatum& b3 = root_datum(Family::B, 3);
  EXPECT_EQ(epsilon_values(b3, b3.omega(2)), (std::vector<Rational>(3, Rational(1, 2))));
  const RootDatum& a3 = root_datum(Family::A, 3);
  const auto e = epsilon_values(a3, a3.omega(0));
  // omega_1 = eps_1 modulo the all-ones vector
  EXPECT_EQ(oracle::omega_coords(Family::A, 3, e), (std::vector<int>{1, 0, 0}));
  for (const auto& [f, n] : all_types()) {
    if (!is_classical(f)) continue;
    const RootDatum& d = root_datum(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      const Weight w = d.omega(i);
      const auto v = epsilon_values(d, w);
      EXPECT_EQ(weight_from_epsilon(d, v), w) << d.name();
      EXPECT_EQ(oracle::omega_coords(f, n, v), std::vector<int>(w.coords().begin(), w.coords().end()));
    }
  }
}

TEST(RootData, ParsingAndFormatting) {
  const RootDatum& c3 = parse_group("C3");
  EXPECT_EQ(c3.name(), "C3");
  const Weight w = parse_weight(c3, "C3:[0,1,0]");
  EXPECT_EQ(w, c3.omega(1));
  EXPECT_EQ(parse_weight(c3, " [ 0 , 1 , 0 ] "), w);
  EXPECT_EQ(format_weight(w), "C3:[0,1,0]");
  EXPECT_EQ(format_coords(parse_weight(c3, "[-1,2,-3]")), "[-1,2,-3]");
  EXPECT_THROW(parse_group("X3"), InvalidInput);
  EXPECT_THROW(parse_group("D3"), InvalidInput);
  EXPECT_THROW(parse_group("E9"), InvalidInput);
  EXPECT_THROW(parse_weight(c3, "[0,1]"), InvalidInput);
  EXPECT_THROW(parse_weight(c3, "B3:[0,1,0]"), InvalidInput);
  EXPECT_THROW(parse_weight(c3, "[0,x,0]"), InvalidInput);
  try {
    parse_weight(c3, "[0,x,0]");
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(root_datum(Family::A, 2).require(c3.omega(0)), InvalidInput);
  EXPECT_THROW(c3.omega(0) + root_datum(Family::B, 3).omega(0), InvalidInput);
}

TEST(RootData, TypeBTwoAndCTwoAreDistinctData) {
  const RootDatum& b2 = root_datum(Family::B, 2);
  const RootDatum& c2 = root_datum(Family::C, 2);
  EXPECT_EQ(b2.cartan[1][0], -2);
  EXPECT_EQ(c2.cartan[0][1], -2);
  EXPECT_EQ(b2.highest_root, b2.weight({0, 2}));
  EXPECT_EQ(c2.highest_root, c2.weight({2, 0}));
}
