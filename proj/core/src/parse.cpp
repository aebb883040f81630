#include "sdist/parse.hpp"

#include "sdist/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>
#include <vector>

namespace sdist {

namespace {

struct RawTerm {
  Rational coefficient = 1;
  // (0-based variable, exponent, text position)
  std::vector<std::tuple<std::size_t, std::uint64_t, std::size_t>> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  std::string digits(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t small_integer(const char* what) {
    const std::size_t start = pos_;
    const std::string d = digits(what);
    if (d.size() > 9) throw ParseError(std::string(what) + " too large", start);
    return std::stoull(d);
  }

  RawTerm term(bool negative) {
    RawTerm t;
    skip_ws();
    if (at_end()) throw ParseError("expected term", pos_);
    bool need_factor = true;
    if (peek_digit()) {
      Integer num(digits("coefficient"));
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        den = Integer(digits("denominator"));
        if (sgn(den) == 0) throw ParseError("zero denominator", den_pos);
      }
      t.coefficient = make_rational(num, den);
      skip_ws();
      if (at_end() || peek() != '*') need_factor = false;
      else ++pos_;
    }
    while (need_factor) {
      t.factors.push_back(factor());
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (negative) t.coefficient = -t.coefficient;
    return t;
  }

  std::tuple<std::size_t, std::uint64_t, std::size_t> factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || peek() != 'x') throw ParseError("expected variable", pos_);
    ++pos_;
    if (!peek_digit()) throw ParseError("expected variable index", pos_);
    const std::uint64_t index = small_integer("variable index");
    if (index == 0) throw ParseError("variable indices start at 1", start);
    std::uint64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exponent = small_integer("exponent");
    }
    return {static_cast<std::size_t>(index - 1), exponent, start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t arity) {
  Polynomial::TermMap terms;
  for (const RawTerm& raw : Parser(text).parse()) {
    std::vector<std::uint64_t> exps(arity, 0);
    for (const auto& [var, e, pos] : raw.factors) {
      if (var >= arity) {
        throw ParseError("variable x" + std::to_string(var + 1) + " exceeds arity " +
                             std::to_string(arity),
                         pos);
      }
      exps[var] += e;
      if (exps[var] > std::numeric_limits<Monomial::Exponent>::max()) {
        throw ParseError("exponent overflow", pos);
      }
    }
    Monomial m(std::vector<Monomial::Exponent>(exps.begin(), exps.end()));
    auto [it, inserted] = terms.try_emplace(std::move(m), raw.coefficient);
    if (!inserted) it->second += raw.coefficient;
  }
  return Polynomial(arity, std::move(terms));
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (const RawTerm& raw : Parser(text).parse()) {
    for (const auto& [var, e, pos] : raw.factors) best = std::max(best, var + 1);
  }
  return best;
}

std::string format_polynomial(const Polynomial& f, TermOrder order) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [order](const auto& a, const auto& b) {
    return compare_monomials(a.first, b.first, order) > 0;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) {
        out += to_string(magnitude);
        out += '*';
      }
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace sdist
