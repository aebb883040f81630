#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sdist {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational in lowest terms with a positive denominator. GMP keeps
/// results of arithmetic canonical; values built from raw parts must go
/// through make_rational.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "[+-]digits" or "[+-]digits/digits". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline int sign(const Rational& value) { return sgn(value); }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace sdist
