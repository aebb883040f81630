#pragma once

#include "sdist/bounds.hpp"
#include "sdist/matrix.hpp"
#include "sdist/point_set.hpp"
#include "sdist/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace sdist {

/// Distinct nonzero squared distances of a point set, ascending.
struct SquaredDistanceSet {
  std::vector<Rational> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Throws std::invalid_argument for fewer than 2 points.
SquaredDistanceSet squared_distance_set(const PointSet& points);

/// M(a, b) = p(a, b) for a polynomial p in x1..xn (first point) and
/// x_{n+1}..x_{2n} (second point). Throws std::invalid_argument unless
/// p.arity() == 2 * points.arity().
RationalMatrix pp_matrix(const PointSet& points, const Polynomial& p);

/// p(y, x): exchanges the two blocks of n variables.
Polynomial swap_arguments(const Polynomial& p);

/// prod_{t^2 in D} (t^2 - |x - y|^2) over the squared distances D of the set,
/// expanded in 2n variables. Only practical for a handful of distances.
Polynomial canonical_distance_polynomial(const PointSet& points);

/// Evaluation matrix of canonical_distance_polynomial computed pointwise
/// from the product form, without expanding the polynomial.
RationalMatrix canonical_pp_matrix(const PointSet& points);

/// Affine Hilbert function h_A(s) of the point set: DegLex standard
/// monomials of I(A) of degree <= s.
std::size_t point_set_hilbert(const PointSet& points, unsigned s);

struct PpCheckReport {
  unsigned s = 0;
  std::size_t h_value = 0;
  std::size_t rank = 0;
  InertiaSignature inertia;
  bool symmetric_input = true;
  bool rank_ok = false;     // rank(M) <= 2 h_A(s)
  bool inertia_ok = false;  // max(r+, r-) <= h_A(s)
};

/// Checks both rank and inertia inequalities for M(A, p). The rank uses M
/// as given; the inertia uses the symmetric part of M, i.e. the matrix of
/// (p(x,y) + p(y,x)) / 2. Throws HypothesisError when deg p > 2s + 1.
PpCheckReport check_pp_theorem(const PointSet& points, const Polynomial& p, unsigned s);

/// Same check for the canonical product polynomial (degree 2s with s the
/// number of distances), using canonical_pp_matrix.
PpCheckReport check_canonical_pp(const PointSet& points);

struct DistanceBoundReport {
  std::size_t s = 0;
  std::size_t size = 0;
  BoundReport bound;
  bool holds = false;
};

/// Evaluates `family` at s = |squared_distance_set(points)| and compares
/// with |points|. When the family's defining set can be tested (unit sphere,
/// box, permutations, 0/1 layer, explicit generators) membership of every
/// point is checked first; a failure throws HypothesisError.
DistanceBoundReport check_distance_bound(const PointSet& points, const BoundFamily& family);

/// Every DegLex standard monomial of I(A) has degree <= |squared distances|.
bool standard_monomials_within_distance_count(const PointSet& points);

}  // namespace sdist
