#pragma once

#include "sdist/groebner.hpp"
#include "sdist/point_set.hpp"
#include "sdist/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdist {

/// Monomials of degree <= degree_cap divisible by no leading monomial of a
/// Groebner basis, sorted ascending in `order`.
struct StandardMonomialSet {
  TermOrder order;
  std::size_t arity;
  unsigned degree_cap;
  std::vector<Monomial> monomials;

  /// counts[t] = number of listed monomials of total degree t, t = 0..degree_cap.
  std::vector<std::size_t> degree_profile() const;
};

StandardMonomialSet standard_monomials_leq(const GroebnerBasis& basis, unsigned s);

/// h(0), ..., h(s_max) of an affine Hilbert function.
class HilbertTable {
 public:
  explicit HilbertTable(std::vector<Integer> values);

  const std::vector<Integer>& values() const noexcept { return values_; }
  unsigned max_degree() const { return static_cast<unsigned>(values_.size() - 1); }
  const Integer& operator()(unsigned s) const { return values_.at(s); }

 private:
  std::vector<Integer> values_;
};

/// Requires a DegLex basis; the zero ideal (empty basis) is allowed.
HilbertTable hilbert_table(const GroebnerBasis& deglex_basis, unsigned s_max);
/// An empty generator list is the zero ideal.
HilbertTable hilbert_table(std::span<const Polynomial> generators, std::size_t arity, unsigned s_max);

Integer hilbert_function(const GroebnerBasis& deglex_basis, unsigned s);
/// Count of DegLex standard monomials of degree <= s; C(n+s, n) for an
/// empty generator list.
Integer hilbert_function(std::span<const Polynomial> generators, std::size_t arity, unsigned s);

/// Reduced Groebner basis of the ideal of polynomials vanishing on every
/// point, computed with the Buchberger-Moeller evaluation method. Throws
/// std::invalid_argument on an empty set.
GroebnerBasis vanishing_ideal(const PointSet& points, TermOrder order);

/// Eventual polynomial behaviour of a Hilbert function, read off from
/// finite differences of h(s) over [s_lo, s_hi].
struct HilbertPolynomialEstimate {
  unsigned s_lo = 0;
  unsigned s_hi = 0;
  std::vector<Integer> values;  // h(s_lo) .. h(s_hi)
  bool stabilized = false;
  /// Set when stabilized.
  unsigned stable_from = 0;
  std::size_t dimension = 0;
  Integer degree;
  /// Coefficients of the interpolating polynomial in s, constant term first.
  std::vector<Rational> coefficients;
  std::string diagnostic;
};

/// Finds the longest tail h(j..s_hi) that is a polynomial of degree d with
/// at least d + 3 samples (two confirming zero differences). Refuses, via
/// `stabilized == false`, rather than guessing.
HilbertPolynomialEstimate estimate_hilbert_polynomial(std::span<const Integer> values, unsigned s_lo);

HilbertPolynomialEstimate hilbert_poly_estimate(std::span<const Polynomial> generators,
                                                std::size_t arity, unsigned s_lo, unsigned s_hi);

}  // namespace sdist
