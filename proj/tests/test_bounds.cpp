#include "support/oracles.hpp"

#include <sdist/bounds.hpp>
#include <sdist/errors.hpp>
#include <sdist/families.hpp>
#include <sdist/hilbert.hpp>
#include <sdist/parse.hpp>

#include <gtest/gtest.h>

namespace sdist {
namespace {

Polynomial P(std::string_view text, std::size_t arity) { return parse_polynomial(text, arity); }

Integer pascal(long n, long k) { return Integer(static_cast<unsigned long>(oracle::pascal(n, k))); }

// x1^2 + ... + xn^2 - r
Polynomial sphere(std::size_t n, long r) {
  Polynomial f = Polynomial::constant(n, -r);
  for (std::size_t i = 0; i < n; ++i) f = f + Polynomial::variable(n, i) * Polynomial::variable(n, i);
  return f;
}

TEST(Bbs, Examples) {
  EXPECT_EQ(bbs_bound(2, 1), 3);
  EXPECT_EQ(bbs_bound(1, 1), 2);
  EXPECT_EQ(bbs_bound(4, 3), 35);
  EXPECT_EQ(bbs_bound(4, 3), hilbert_function(std::vector<Polynomial>{}, 4, 3));
  EXPECT_THROW(bbs_bound(0, 1), std::invalid_argument);
  EXPECT_THROW(bbs_bound(2, 0), std::invalid_argument);
}

TEST(Dgs, Examples) {
  EXPECT_EQ(dgs_bound(2, 1), 3);
  EXPECT_EQ(dgs_bound(3, 2), 9);
  EXPECT_EQ(dgs_bound(3, 2), hilbert_function(std::vector<Polynomial>{sphere(3, 1)}, 3, 2));
  EXPECT_EQ(dgs_bound(2, 2), 5);
  EXPECT_THROW(dgs_bound(1, 1), std::invalid_argument);
}

TEST(Hypersurface, Examples) {
  EXPECT_EQ(hypersurface_bound(2, 3, 3), 9);
  EXPECT_EQ(hypersurface_bound(2, 2, 3), 7);
  EXPECT_EQ(hypersurface_bound(2, 2, 3), dgs_bound(2, 3));
  EXPECT_EQ(hypersurface_bound(3, 5, 2), 10);
  EXPECT_THROW(hypersurface_bound(2, 0, 3), std::invalid_argument);
}

TEST(PlaneCurve, Examples) {
  EXPECT_EQ(plane_curve_bound(3, 3), 9);
  EXPECT_EQ(plane_curve_bound(1, 5), 6);
  EXPECT_EQ(plane_curve_bound(4, 6), 22);
  EXPECT_EQ(plane_curve_bound(4, 6), pascal(8, 2) - pascal(4, 2));
  EXPECT_THROW(plane_curve_bound(4, 3), HypothesisError);
}

TEST(SphereUnion, Examples) {
  EXPECT_EQ(sphere_union_bound(2, 1, 2), 5);
  EXPECT_EQ(sphere_union_bound(2, 1, 2), dgs_bound(2, 2));
  EXPECT_EQ(sphere_union_bound(2, 2, 4), 14);
  EXPECT_EQ(sphere_union_sum(2, 2, 4), pascal(5, 4) + pascal(4, 3) + pascal(3, 2) + pascal(2, 1));
  EXPECT_EQ(sphere_union_difference(2, 2, 4), pascal(6, 2) - pascal(2, 2));
  EXPECT_EQ(sphere_union_bound(3, 2, 3), 20);
  EXPECT_EQ(sphere_union_bound(3, 2, 3), bbs_bound(3, 3));
  EXPECT_THROW(sphere_union_bound(2, 0, 3), std::invalid_argument);
}

TEST(Box, Examples) {
  EXPECT_EQ(box_bound(3, 2, 1), 4);
  EXPECT_EQ(box_bound(2, 2, 2), 4);
  EXPECT_EQ(box_bound(1, 5, 3), 4);
  EXPECT_THROW(box_bound(2, 1, 2), std::invalid_argument);
}

TEST(ExtendedBinomial, Examples) {
  EXPECT_EQ(extended_binomial(2, 2, 3), 3);
  EXPECT_EQ(extended_binomial(4, 1, 2), 4);
  EXPECT_EQ(extended_binomial(3, 0, 9), 1);
  EXPECT_EQ(extended_binomial(2, 5, 3), 0);
}

TEST(Inversions, Examples) {
  auto as_ints = [](const InversionTable& t) {
    std::vector<unsigned long> out;
    for (const auto& c : t.counts) out.push_back(c.get_ui());
    return out;
  };
  EXPECT_EQ(as_ints(inversion_numbers(3)), (std::vector<unsigned long>{1, 2, 2, 1}));
  EXPECT_EQ(as_ints(inversion_numbers(1)), (std::vector<unsigned long>{1}));
  EXPECT_EQ(as_ints(inversion_numbers(4)), (std::vector<unsigned long>{1, 3, 5, 6, 5, 3, 1}));
}

TEST(Permutation, Examples) {
  EXPECT_EQ(permutation_bound(3, 1), 3);
  EXPECT_EQ(permutation_bound(3, 3), 6);
  EXPECT_EQ(permutation_bound(4, 2), 9);
  EXPECT_EQ(permutation_bound(3, 50), 6);
}

TEST(Uniform, Examples) {
  EXPECT_EQ(uniform_bound(4, 2, 1), 4);
  EXPECT_EQ(uniform_bound(6, 3, 3), 20);
  EXPECT_EQ(uniform_bound(6, 3, 3), generate_family(UniformLayerSpec{6, 3}).size());
  EXPECT_EQ(uniform_bound(5, 0, 0), 1);
  EXPECT_THROW(uniform_bound(4, 1, 2), HypothesisError);
  EXPECT_THROW(uniform_bound(4, 5, 0), std::invalid_argument);
}

TEST(General, Examples) {
  EXPECT_EQ(general_bound(std::vector<Polynomial>{P("x1^2 + x2^2 - 1", 2)}, 2, 2), 5);
  EXPECT_EQ(general_bound(std::vector<Polynomial>{P("x1^2 - x1", 2), P("x2^2 - x2", 2)}, 2, 1), 3);
  EXPECT_EQ(general_bound(std::vector<Polynomial>{P("x1^2 - x1", 2), P("x2^2 - x2", 2)}, 2, 1),
            box_bound(2, 2, 1));
  EXPECT_EQ(general_bound(std::vector<Polynomial>{}, 2, 1), 3);
}

TEST(EvaluateBound, ReportsParametersAndFormula) {
  const BoundReport r = evaluate_bound(BoundFamily{Family::DGS, {{"n", 3}}, {}}, 2);
  EXPECT_EQ(r.value, 9);
  EXPECT_EQ(r.parameters.at("s"), 2);
  EXPECT_EQ(r.formula_text, "C(4,2) + C(3,1)");
  EXPECT_THROW(evaluate_bound(BoundFamily{Family::Box, {{"n", 2}}, {}}, 2), std::invalid_argument);
  EXPECT_EQ(parse_family("spheres"), Family::SphereUnion);
  EXPECT_THROW(parse_family("cube"), std::invalid_argument);
}

// ---- properties -----------------------------------------------------------

TEST(BoundProperties, HockeyStick) {
  for (long n = 2; n <= 8; ++n) {
    for (long s = 1; s <= 12; ++s) EXPECT_EQ(hypersurface_bound(n, 2, s), dgs_bound(n, s)) << n << "," << s;
  }
}

TEST(BoundProperties, SphereUnionForms) {
  for (long n = 2; n <= 8; ++n) {
    for (long p = 1; p <= 4; ++p) {
      for (long s = 2 * p; s <= 2 * p + 8; ++s) {
        EXPECT_EQ(sphere_union_sum(n, p, s), sphere_union_difference(n, p, s));
      }
      if (p == 1) {
        for (long s = 1; s <= 8; ++s) EXPECT_EQ(sphere_union_bound(n, 1, s), dgs_bound(n, s));
      }
    }
  }
}

TEST(BoundProperties, PlaneCurveIsHypersurfaceInThePlane) {
  for (long s = 1; s <= 12; ++s) {
    for (long d = 1; d <= s; ++d) EXPECT_EQ(plane_curve_bound(d, s), hypersurface_bound(2, d, s));
  }
}

TEST(BoundProperties, BoxAgreesWithCompositions) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned q = 2; q <= 4; ++q) {
      Integer running = 0;
      for (unsigned s = 0; s <= n * (q - 1) + 1; ++s) {
        const Integer eb = extended_binomial(n, s, q);
        EXPECT_EQ(eb, oracle::count_compositions(n, s, q));
        running += eb;
        EXPECT_EQ(box_bound(n, q, s), running);
        EXPECT_EQ(box_bound(n, q, s), oracle::count_box_monomials(n, q, s));
        if (q == 2) {
          Integer binomial_sum = 0;
          for (unsigned j = 0; j <= s; ++j) binomial_sum += pascal(n, j);
          EXPECT_EQ(box_bound(n, 2, s), binomial_sum);
        }
      }
    }
  }
}

TEST(BoundProperties, InversionSymmetryAndTotal) {
  for (unsigned n = 1; n <= 8; ++n) {
    const InversionTable t = inversion_numbers(n);
    const std::size_t top = n * (n - 1) / 2;
    ASSERT_EQ(t.counts.size(), top + 1);
    Integer total = 0;
    for (std::size_t i = 0; i <= top; ++i) {
      EXPECT_EQ(t.counts[i], t.counts[top - i]);
      total += t.counts[i];
    }
    Integer factorial = 1;
    for (unsigned k = 2; k <= n; ++k) factorial *= k;
    EXPECT_EQ(total, factorial);
    if (n <= 6) {
      const auto hist = oracle::inversion_histogram(n);
      for (std::size_t i = 0; i <= top; ++i) EXPECT_EQ(t.counts[i], hist[i]);
    }
  }
}

TEST(BoundProperties, GeneralBoundReproducesClosedForms) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::vector<Polynomial> gens{sphere(n, 1)};
    for (long s = 1; s <= 4; ++s) EXPECT_EQ(general_bound(gens, n, s), dgs_bound(n, s));
  }
  // Two concentric circles.
  const std::vector<Polynomial> two_spheres{sphere(2, 1) * sphere(2, 4)};
  for (long s = 1; s <= 6; ++s) EXPECT_EQ(general_bound(two_spheres, 2, s), sphere_union_bound(2, 2, s));

  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Polynomial> box;
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial x = Polynomial::variable(n, i);
      box.push_back(x * (x - Polynomial::constant(n, 1)) * (x - Polynomial::constant(n, 2)));
    }
    for (long s = 0; s <= 7; ++s) EXPECT_EQ(general_bound(box, n, s), box_bound(n, 3, s));
  }

  for (long n = 2; n <= 4; ++n) {
    PermutationSpec spec;
    for (long i = 1; i <= n; ++i) spec.values.push_back(i);
    const GroebnerBasis gb = vanishing_ideal(generate_family(spec), TermOrder::DegLex);
    for (long s = 0; s <= n * (n - 1) / 2 + 1; ++s) {
      EXPECT_EQ(general_bound(gb.elements(), n, s), permutation_bound(n, s)) << n << "," << s;
    }
  }
}

TEST(BoundProperties, MonotoneAndBelowBbs) {
  for (long n = 2; n <= 6; ++n) {
    for (long s = 1; s <= 10; ++s) {
      const Integer bbs = bbs_bound(n, s);
      EXPECT_LE(bbs_bound(n, s - 1 > 0 ? s - 1 : 1), bbs);
      EXPECT_LE(dgs_bound(n, s), bbs);
      for (long d = 1; d <= 4; ++d) EXPECT_LE(hypersurface_bound(n, d, s), bbs);
      for (long p = 1; p <= 3; ++p) EXPECT_LE(sphere_union_bound(n, p, s), bbs);
      for (long q = 2; q <= 4; ++q) EXPECT_LE(box_bound(n, q, s), bbs);
      EXPECT_LE(permutation_bound(n, s), bbs);
      if (s > 1) {
        EXPECT_LE(dgs_bound(n, s - 1), dgs_bound(n, s));
        for (long d = 1; d <= 4; ++d) EXPECT_LE(hypersurface_bound(n, d, s - 1), hypersurface_bound(n, d, s));
        for (long p = 1; p <= 3; ++p) EXPECT_LE(sphere_union_bound(n, p, s - 1), sphere_union_bound(n, p, s));
        for (long q = 2; q <= 4; ++q) EXPECT_LE(box_bound(n, q, s - 1), box_bound(n, q, s));
        EXPECT_LE(permutation_bound(n, s - 1), permutation_bound(n, s));
      }
    }
    for (long d = 0; d <= n; ++d) {
      for (long s = 1; s <= std::min(d, n - d); ++s) EXPECT_LE(uniform_bound(n, d, s - 1), uniform_bound(n, d, s));
    }
  }
}

}  // namespace
}  // namespace sdist
