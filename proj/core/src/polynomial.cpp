#include "sdist/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace sdist {

namespace {

void require_same_arity(const Polynomial& f, const Polynomial& g) {
  if (f.arity() != g.arity()) {
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(f.arity()) +
                                " vs " + std::to_string(g.arity()));
  }
}

void accumulate(Polynomial::TermMap& terms, const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

}  // namespace

std::uint64_t Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is -infinity");
  return value_;
}

Polynomial::Polynomial(std::size_t arity) : arity_(arity) {}

Polynomial::Polynomial(std::size_t arity, TermMap terms) : arity_(arity), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.arity() != arity_) throw std::invalid_argument("term arity mismatch");
    it = sdist::is_zero(it->second) ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  return term(Monomial::one(arity), c);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.arity());
  if (!sdist::is_zero(c)) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  return term(Monomial::variable(arity, index), 1);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Degree Polynomial::degree() const {
  Degree d = Degree::minus_infinity();
  for (const auto& [m, c] : terms_) d = std::max(d, Degree(m.total_degree()));
  return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total = 0;
  std::vector<std::vector<Rational>> powers(arity_, std::vector<Rational>{Rational(1)});
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      const auto e = m[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
      value *= cache[e];
    }
    total += value;
  }
  return total;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial out(*this);
  for (const auto& [m, c] : other.terms_) accumulate(out.terms_, m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial out(*this);
  for (const auto& [m, c] : other.terms_) accumulate(out.terms_, m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_arity(*this, other);
  Polynomial out(arity_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) accumulate(out.terms_, m1 * m2, c1 * c2);
  }
  return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  if (sdist::is_zero(scalar)) return Polynomial(arity_);
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c *= scalar;
  return out;
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Rational& c) const {
  if (m.arity() != arity_) throw std::invalid_argument("term arity mismatch");
  Polynomial out(arity_);
  if (sdist::is_zero(c)) return out;
  // Multiplying by a monomial preserves the lexicographic storage order.
  for (const auto& [mm, cc] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, cc * c);
  return out;
}

LeadingTerm leading_term(const Polynomial& f, TermOrder order) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  if (order == TermOrder::Lex) {
    const auto& [m, c] = *f.terms().rbegin();
    return {m, c};
  }
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (compare_monomials(it->first, best->first, order) > 0) best = it;
  }
  return {best->first, best->second};
}

Monomial leading_monomial(const Polynomial& f, TermOrder order) {
  return leading_term(f, order).monomial;
}

Polynomial make_monic(const Polynomial& f, TermOrder order) {
  if (f.is_zero()) return f;
  return f * Rational(1 / leading_term(f, order).coefficient);
}

}  // namespace sdist
