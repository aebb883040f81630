#pragma once

#include "sdist/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sdist {

/// A Groebner basis together with the term order it was computed for.
///
/// Elements are monic. A reduced basis is sorted by ascending leading
/// monomial, which makes it canonical for the ideal. An empty element list
/// stands for the zero ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t arity, TermOrder order, std::vector<Polynomial> elements, bool reduced);

  std::size_t arity() const noexcept { return arity_; }
  TermOrder order() const noexcept { return order_; }
  bool reduced() const noexcept { return reduced_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  /// True when the ideal contains 1.
  bool is_unit_ideal() const;

  std::vector<Monomial> leading_monomials() const;
  /// True when no leading monomial of the basis divides m.
  bool is_standard(const Monomial& m) const;

 private:
  std::size_t arity_;
  TermOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leading_;
  bool reduced_;
};

/// (L/lt(f)) f - (L/lt(g)) g with L = lcm(lm f, lm g). Throws
/// std::invalid_argument on a zero input or an arity mismatch.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder order);

/// Result of multivariate division: f = sum(quotients[i] * divisors[i]) + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Full reduction of f by `divisors`: the largest reducible monomial is
/// always reduced next, trying divisors in list order. No monomial of the
/// remainder is divisible by a leading monomial of a divisor.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder order);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// criterion, and the chain criterion; the result is the reduced basis.
/// Throws std::invalid_argument when every generator is zero.
GroebnerBasis buchberger(std::span<const Polynomial> generators, TermOrder order);

/// Turns a Groebner basis into the reduced one: drop elements with a
/// redundant leading monomial, reduce tails, make monic, sort.
GroebnerBasis reduce_basis(std::span<const Polynomial> basis, TermOrder order);

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace sdist
