#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sdist {

/// x1^e1 * ... * xn^en as a dense exponent vector of fixed arity n.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  /// The monomial 1 in `arity` variables.
  static Monomial one(std::size_t arity);
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  /// x_{index+1}^power; `index` is 0-based.
  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const noexcept { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  std::uint64_t total_degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
  /// Storage order: lexicographic on the exponent vector, which is the Lex
  /// term order with x1 > x2 > ... > xn.
  std::strong_ordering operator<=>(const Monomial& other) const {
    return exponents_ <=> other.exponents_;
  }

 private:
  std::vector<Exponent> exponents_;
  std::uint64_t degree_ = 0;
};

/// Term orders with fixed variable precedence x1 > x2 > ... > xn.
enum class TermOrder { Lex, DegLex };

/// Total order comparison of u and v. Throws std::invalid_argument on an
/// arity mismatch.
std::strong_ordering compare_monomials(const Monomial& u, const Monomial& v, TermOrder order);

/// Strict-weak-ordering adapter for ordered containers.
struct MonomialLess {
  TermOrder order;
  bool operator()(const Monomial& u, const Monomial& v) const;
};

/// "1", "x1", "x1^2*x3".
std::string to_string(const Monomial& m);
std::string to_string(TermOrder order);

}  // namespace sdist
