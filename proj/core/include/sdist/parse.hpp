#pragma once

#include "sdist/polynomial.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace sdist {

// Polynomial text grammar (whitespace between tokens is ignored):
//
//   polynomial := [sign] term (sign term)*
//   term       := coeff | [coeff '*'] factor ('*' factor)*
//   factor     := 'x' index ['^' exponent]
//   coeff      := int | int '/' int
//
// Variables are 1-based: x1 .. xn.

/// Throws ParseError on malformed text, on a variable index outside 1..arity,
/// and on a zero denominator.
Polynomial parse_polynomial(std::string_view text, std::size_t arity);

/// Largest variable index used in `text` (0 for a constant). Throws ParseError.
std::size_t max_variable_index(std::string_view text);

/// Terms in descending `order`, e.g. "x1^2 + x2^2 - 1", "3/4*x1*x3", "0".
std::string format_polynomial(const Polynomial& f, TermOrder order = TermOrder::DegLex);

}  // namespace sdist
