#include "sdist/rational.hpp"

#include "sdist/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace sdist {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits", start);
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t end = scan_digits(text, pos);
  Integer num(std::string(text.substr(pos, end - pos)));
  Integer den = 1;
  if (end < text.size() && text[end] == '/') {
    const std::size_t den_start = end + 1;
    const std::size_t den_end = scan_digits(text, den_start);
    den = Integer(std::string(text.substr(den_start, den_end - den_start)));
    if (sgn(den) == 0) throw ParseError("zero denominator", den_start);
    end = den_end;
  }
  if (end != text.size()) throw ParseError("unexpected character in rational", end);
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace sdist
