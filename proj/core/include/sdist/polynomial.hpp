#pragma once

#include "sdist/monomial.hpp"
#include "sdist/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace sdist {

/// Total degree of a polynomial. The zero polynomial has degree -infinity,
/// which absorbs under addition and sorts below every finite degree.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  constexpr explicit Degree(std::uint64_t value) : value_(value), finite_(true) {}

  constexpr bool is_finite() const { return finite_; }
  /// Requires is_finite().
  std::uint64_t value() const;

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() = default;
  std::uint64_t value_ = 0;
  bool finite_ = false;
};

/// Element of Q[x1..xn]: a finite map from monomials to nonzero rationals.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  /// The zero polynomial in `arity` variables.
  explicit Polynomial(std::size_t arity);
  /// Zero coefficients are dropped; every monomial must have `arity` variables.
  Polynomial(std::size_t arity, TermMap terms);

  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial term(const Monomial& m, const Rational& c);
  /// x_{index+1}
  static Polynomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Degree degree() const;

  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  /// (c * m) * this
  Polynomial multiply_term(const Monomial& m, const Rational& c) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  std::size_t arity_;
  TermMap terms_;
};

struct LeadingTerm {
  Monomial monomial;
  Rational coefficient;
};

/// The order-maximal term of f. Throws std::invalid_argument for f == 0.
LeadingTerm leading_term(const Polynomial& f, TermOrder order);
Monomial leading_monomial(const Polynomial& f, TermOrder order);
/// f divided by its leading coefficient.
Polynomial make_monic(const Polynomial& f, TermOrder order);

}  // namespace sdist
