#pragma once

#include <sdist/matrix.hpp>
#include <sdist/point_set.hpp>
#include <sdist/polynomial.hpp>

#include <cstddef>
#include <random>

namespace sdist::testing {

using Rng = std::mt19937_64;

/// a/b with |a| <= max_num, 1 <= b <= max_den.
Rational random_rational(Rng& rng, long max_num = 5, long max_den = 3);

/// Polynomial of exact total degree `degree` with up to `extra_terms` random
/// lower-or-equal-degree terms plus one guaranteed top-degree term.
Polynomial random_polynomial(Rng& rng, std::size_t arity, unsigned degree, std::size_t extra_terms = 4);

/// Polynomial of degree <= max_degree (may be zero) in `arity` variables.
Polynomial random_polynomial_upto(Rng& rng, std::size_t arity, unsigned max_degree, std::size_t terms);

/// `count` distinct points with integer coordinates in [-range, range].
PointSet random_point_set(Rng& rng, std::size_t arity, std::size_t count, long range = 2);

RationalMatrix random_symmetric(Rng& rng, std::size_t m, double zero_probability = 0.3);

/// Random matrix with nonzero determinant (lower * upper unitriangular-ish
/// product with nonzero diagonal).
RationalMatrix random_invertible(Rng& rng, std::size_t m);

}  // namespace sdist::testing
