#include "sdist/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sdist {

namespace {

std::uint64_t sum(const std::vector<Monomial::Exponent>& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

void require_same_arity(const Monomial& u, const Monomial& v) {
  if (u.arity() != v.arity()) {
    throw std::invalid_argument("monomial arity mismatch: " + std::to_string(u.arity()) +
                                " vs " + std::to_string(v.arity()));
  }
}

}  // namespace

Monomial Monomial::one(std::size_t arity) {
  return Monomial(std::vector<Exponent>(arity, 0));
}

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)), degree_(sum(exponents_)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : exponents_(exponents), degree_(sum(exponents_)) {}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  std::vector<Exponent> e(arity, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_arity(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0 && other.exponents_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_arity(*this, other);
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial is not divisible");
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_arity(*this, other);
  std::vector<Exponent> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exponents_[i]);
  return Monomial(std::move(e));
}

std::strong_ordering compare_monomials(const Monomial& u, const Monomial& v, TermOrder order) {
  require_same_arity(u, v);
  if (order == TermOrder::DegLex) {
    if (auto c = u.total_degree() <=> v.total_degree(); c != 0) return c;
  }
  return u <=> v;
}

bool MonomialLess::operator()(const Monomial& u, const Monomial& v) const {
  return compare_monomials(u, v, order) < 0;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out;
}

std::string to_string(TermOrder order) {
  return order == TermOrder::Lex ? "lex" : "deglex";
}

}  // namespace sdist
