#include "support/oracles.hpp"
#include "support/random_instances.hpp"

#include <sdist/bounds.hpp>
#include <sdist/families.hpp>
#include <sdist/hilbert.hpp>
#include <sdist/parse.hpp>
#include <sdist/verify.hpp>

#include <gtest/gtest.h>

#include <algorithm>

namespace sdist {
namespace {

constexpr TermOrder kDL = TermOrder::DegLex;

Polynomial P(std::string_view text, std::size_t arity) { return parse_polynomial(text, arity); }

GroebnerBasis gb_of(std::vector<Polynomial> gens) { return buchberger(gens, kDL); }

std::vector<std::string> monomial_strings(const StandardMonomialSet& sm) {
  std::vector<std::string> out;
  for (const auto& m : sm.monomials) out.push_back(to_string(m));
  return out;
}

Integer binom(long n, long k) { return Integer(static_cast<unsigned long>(oracle::pascal(n, k))); }

TEST(StandardMonomials, Examples) {
  const auto box = standard_monomials_leq(gb_of({P("x1^2 - x1", 2), P("x2^2 - x2", 2)}), 2);
  EXPECT_EQ(monomial_strings(box), (std::vector<std::string>{"1", "x2", "x1", "x1*x2"}));

  const auto line = standard_monomials_leq(gb_of({P("x1", 1)}), 3);
  EXPECT_EQ(monomial_strings(line), (std::vector<std::string>{"1"}));

  const auto circle = standard_monomials_leq(gb_of({P("x1^2 + x2^2 - 1", 2)}), 2);
  EXPECT_EQ(monomial_strings(circle), (std::vector<std::string>{"1", "x2", "x1", "x2^2", "x1*x2"}));
  EXPECT_EQ(circle.degree_profile(), (std::vector<std::size_t>{1, 2, 2}));
}

TEST(StandardMonomials, ZeroAndUnitIdeal) {
  const GroebnerBasis zero(3, kDL, {}, true);
  EXPECT_EQ(standard_monomials_leq(zero, 2).monomials.size(), 10u);
  const auto unit = standard_monomials_leq(gb_of({P("1", 2)}), 4);
  EXPECT_TRUE(unit.monomials.empty());
}

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(hilbert_function(std::vector<Polynomial>{P("x1^2 + x2^2 - 1", 2)}, 2, 3), 7);
  EXPECT_EQ(hilbert_function(std::vector<Polynomial>{}, 3, 2), 10);
  EXPECT_EQ(hilbert_function(std::vector<Polynomial>{P("x1^2 - x1", 3), P("x2^2 - x2", 3), P("x3^2 - x3", 3)}, 3, 1),
            4);
}

TEST(HilbertFunction, TableMatchesPointwise) {
  const std::vector<Polynomial> gens{P("x1^2 + x2^2 - 1", 2)};
  const HilbertTable table = hilbert_table(gens, 2, 6);
  for (unsigned s = 0; s <= 6; ++s) EXPECT_EQ(table(s), hilbert_function(gens, 2, s));
  EXPECT_EQ(table(0), 1);
  EXPECT_EQ(table(6), 13);
}

TEST(VanishingIdeal, TwoPointsOnALine) {
  const GroebnerBasis gb = vanishing_ideal(PointSet(1, {{0}, {1}}), kDL);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.elements()[0], P("x1^2 - x1", 1));
  EXPECT_EQ(standard_monomials_leq(gb, 1).monomials.size(), 2u);
}

TEST(VanishingIdeal, UnitSquare) {
  const GroebnerBasis gb = vanishing_ideal(PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), kDL);
  std::set<std::string> got;
  for (const auto& g : gb.elements()) got.insert(format_polynomial(g));
  EXPECT_EQ(got, (std::set<std::string>{"x1^2 - x1", "x2^2 - x2"}));
  EXPECT_EQ(standard_monomials_leq(gb, 4).monomials.size(), 4u);
}

TEST(VanishingIdeal, PermutationsOfThree) {
  const PointSet x3 = generate_family(PermutationSpec{{1, 2, 3}});
  const GroebnerBasis gb = vanishing_ideal(x3, kDL);
  const auto sm = standard_monomials_leq(gb, 6);
  EXPECT_EQ(sm.monomials.size(), 6u);
  EXPECT_EQ(sm.degree_profile(), (std::vector<std::size_t>{1, 2, 2, 1, 0, 0, 0}));
}

TEST(VanishingIdeal, Errors) {
  EXPECT_THROW(vanishing_ideal(PointSet(2, {}), kDL), std::invalid_argument);
  EXPECT_THROW(PointSet(1, {{1}, {1}}), std::invalid_argument);
}

TEST(HilbertPolyEstimate, Circle) {
  const auto est = hilbert_poly_estimate(std::vector<Polynomial>{P("x1^2 + x2^2 - 1", 2)}, 2, 2, 8);
  ASSERT_TRUE(est.stabilized) << est.diagnostic;
  EXPECT_EQ(est.dimension, 1u);
  EXPECT_EQ(est.degree, 2);
  EXPECT_EQ(est.coefficients, (std::vector<Rational>{1, 2}));
}

TEST(HilbertPolyEstimate, ZeroIdealPlane) {
  const auto est = hilbert_poly_estimate(std::vector<Polynomial>{}, 2, 0, 6);
  ASSERT_TRUE(est.stabilized) << est.diagnostic;
  EXPECT_EQ(est.dimension, 2u);
  EXPECT_EQ(est.degree, 1);
  EXPECT_EQ(est.coefficients, (std::vector<Rational>{1, Rational(3, 2), Rational(1, 2)}));
}

TEST(HilbertPolyEstimate, EllipticCurve) {
  const auto est = hilbert_poly_estimate(std::vector<Polynomial>{P("x2^2 - x1^3 - 1", 2)}, 2, 3, 9);
  ASSERT_TRUE(est.stabilized) << est.diagnostic;
  EXPECT_EQ(est.dimension, 1u);
  EXPECT_EQ(est.degree, 3);
  EXPECT_EQ(est.coefficients, (std::vector<Rational>{0, 3}));
}

TEST(HilbertPolyEstimate, FiniteSetIsDimensionZero) {
  const auto est = hilbert_poly_estimate(
      std::vector<Polynomial>{P("x1^2 - x1", 2), P("x2^2 - x2", 2)}, 2, 0, 6);
  ASSERT_TRUE(est.stabilized) << est.diagnostic;
  EXPECT_EQ(est.dimension, 0u);
  EXPECT_EQ(est.degree, 4);
}

TEST(HilbertPolyEstimate, RefusesShortOrUnstableWindow) {
  // h = 1, 3, 5, 7 from s = 0 only stabilizes at s = 1 for the circle.
  const auto short_window = hilbert_poly_estimate(std::vector<Polynomial>{P("x1^2 + x2^2 - 1", 2)}, 2, 0, 2);
  EXPECT_FALSE(short_window.stabilized);
  EXPECT_FALSE(short_window.diagnostic.empty());

  const std::vector<Integer> plane{1, 3, 6, 10, 15};
  EXPECT_TRUE(estimate_hilbert_polynomial(plane, 0).stabilized);
  const std::vector<Integer> doubling{1, 2, 4, 8, 16, 32};
  EXPECT_FALSE(estimate_hilbert_polynomial(doubling, 0).stabilized);
  EXPECT_THROW(hilbert_poly_estimate(std::vector<Polynomial>{}, 2, 5, 4), std::invalid_argument);
}

// ---- properties -----------------------------------------------------------

TEST(HilbertProperties, InterpolationCountBothOrders) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t m = 1 + rng() % 8;
    const PointSet x = testing::random_point_set(rng, n, std::min<std::size_t>(m, n == 1 ? 5 : m));
    for (TermOrder order : {TermOrder::Lex, TermOrder::DegLex}) {
      const GroebnerBasis gb = vanishing_ideal(x, order);
      EXPECT_EQ(standard_monomials_leq(gb, static_cast<unsigned>(x.size())).monomials.size(), x.size());
      for (const auto& g : gb.elements()) {
        for (const auto& pt : x.points()) EXPECT_EQ(g.evaluate(pt), 0);
      }
      // Cross-check the ideal against Buchberger on its own output.
      EXPECT_EQ(buchberger(gb.elements(), order).elements(), gb.elements());
    }
  }
}

TEST(HilbertProperties, PointHilbertMonotoneSaturatingAndMatchesRank) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const PointSet x = testing::random_point_set(rng, n, n == 1 ? 4 : 2 + rng() % 6);
    const GroebnerBasis gb = vanishing_ideal(x, kDL);
    const unsigned top = static_cast<unsigned>(x.size()) + 1;
    const HilbertTable table = hilbert_table(gb, top);
    for (unsigned s = 0; s <= top; ++s) {
      if (s > 0) EXPECT_LE(table(s - 1), table(s));
      if (s + 1 >= x.size()) EXPECT_EQ(table(s), x.size());
      if (s <= 3) EXPECT_EQ(table(s), oracle::point_hilbert_by_rank(x, s));
    }
  }
}

TEST(HilbertProperties, PrincipalIdealsFollowClosedForm) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const unsigned d = 1 + trial % 4;
    const Polynomial f = testing::random_polynomial(rng, n, d, 3);
    const std::vector<Polynomial> gens{f};
    for (unsigned s = 0; s <= d + 3; ++s) {
      const Integer expected =
          s < d ? binom(n + s, n) : binom(n + s, n) - binom(n + s - d, n);
      EXPECT_EQ(hilbert_function(gens, n, s), expected) << format_polynomial(f) << " s=" << s;
      if (s <= d + 1) EXPECT_EQ(hilbert_function(gens, n, s), oracle::principal_hilbert_by_rank(f, s));
    }
  }
}

TEST(HilbertProperties, ProfileIndependentOfGeneratorOrder) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testing::random_polynomial(rng, 3, 1 + rng() % 2, 2));
    const auto profile = standard_monomials_leq(gb_of(gens), 4).degree_profile();
    std::reverse(gens.begin(), gens.end());
    EXPECT_EQ(standard_monomials_leq(gb_of(gens), 4).degree_profile(), profile);
    std::rotate(gens.begin(), gens.begin() + 1, gens.end());
    EXPECT_EQ(standard_monomials_leq(gb_of(gens), 4).degree_profile(), profile);
  }
}

TEST(HilbertProperties, StandardMonomialsOfSDistanceSetHaveDegreeAtMostS) {
  testing::Rng rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const PointSet a = testing::random_point_set(rng, n, n == 1 ? 2 + rng() % 3 : 2 + rng() % 6);
    const std::size_t s = squared_distance_set(a).size();
    const GroebnerBasis gb = vanishing_ideal(a, kDL);
    for (const auto& m : standard_monomials_leq(gb, static_cast<unsigned>(a.size())).monomials) {
      EXPECT_LE(m.total_degree(), s);
    }
  }
}

}  // namespace
}  // namespace sdist
