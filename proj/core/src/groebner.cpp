#include "sdist/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace sdist {

namespace {

void require_arity(const Polynomial& f, std::size_t arity) {
  if (f.arity() != arity) throw std::invalid_argument("polynomial arity mismatch");
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t arity, TermOrder order, std::vector<Polynomial> elements,
                             bool reduced)
    : arity_(arity), order_(order), elements_(std::move(elements)), reduced_(reduced) {
  leading_.reserve(elements_.size());
  for (const auto& g : elements_) {
    require_arity(g, arity_);
    if (g.is_zero()) throw std::invalid_argument("Groebner basis element is zero");
    const LeadingTerm lt = leading_term(g, order_);
    if (lt.coefficient != 1) throw std::invalid_argument("Groebner basis element is not monic");
    leading_.push_back(lt.monomial);
  }
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const { return leading_; }

bool GroebnerBasis::is_standard(const Monomial& m) const {
  return std::none_of(leading_.begin(), leading_.end(),
                      [&](const Monomial& lm) { return lm.divides(m); });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, TermOrder order) {
  if (f.arity() != g.arity()) throw std::invalid_argument("polynomial arity mismatch");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  const LeadingTerm lf = leading_term(f, order);
  const LeadingTerm lg = leading_term(g, order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.multiply_term(l / lf.monomial, Rational(1 / lf.coefficient)) -
         g.multiply_term(l / lg.monomial, Rational(1 / lg.coefficient));
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder order) {
  const std::size_t arity = f.arity();
  std::vector<LeadingTerm> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    require_arity(g, arity);
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    leads.push_back(leading_term(g, order));
  }

  using Work = std::map<Monomial, Rational, MonomialLess>;
  Work work(f.terms().begin(), f.terms().end(), MonomialLess{order});
  std::vector<Polynomial::TermMap> quotients(divisors.size());
  Polynomial::TermMap remainder;

  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial m = top->first;
    const Rational c = top->second;
    std::size_t i = 0;
    while (i < leads.size() && !leads[i].monomial.divides(m)) ++i;
    if (i == leads.size()) {
      remainder.emplace(m, c);
      work.erase(top);
      continue;
    }
    const Monomial shift = m / leads[i].monomial;
    const Rational factor = c / leads[i].coefficient;
    quotients[i].emplace(shift, 0).first->second += factor;
    for (const auto& [gm, gc] : divisors[i].terms()) {
      const Rational delta = factor * gc;
      auto [it, inserted] = work.try_emplace(gm * shift, -delta);
      if (!inserted) {
        it->second -= delta;
        if (is_zero(it->second)) work.erase(it);
      }
    }
  }

  Division out{{}, Polynomial(arity, std::move(remainder))};
  out.quotients.reserve(divisors.size());
  for (auto& q : quotients) out.quotients.emplace_back(arity, std::move(q));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder order) {
  if (divisors.empty()) throw std::invalid_argument("normal form needs at least one divisor");
  return divide(f, divisors, order).remainder;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  require_arity(f, basis.arity());
  if (basis.is_zero_ideal()) return f;
  return divide(f, basis.elements(), basis.order()).remainder;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Pairs still waiting, keyed by (i, j) with i < j.
class PairQueue {
 public:
  explicit PairQueue(TermOrder order) : order_(order) {}

  void add(std::size_t i, std::size_t j, Monomial lcm) {
    pending_.emplace(std::make_pair(i, j), std::move(lcm));
  }

  bool contains(std::size_t i, std::size_t j) const {
    return pending_.count(std::minmax(i, j)) != 0;
  }

  bool empty() const { return pending_.empty(); }

  // Normal strategy: smallest lcm first, ties by index.
  Pair pop() {
    auto best = pending_.begin();
    for (auto it = std::next(best); it != pending_.end(); ++it) {
      if (compare_monomials(it->second, best->second, order_) < 0) best = it;
    }
    Pair p{best->first.first, best->first.second, best->second};
    pending_.erase(best);
    return p;
  }

 private:
  TermOrder order_;
  std::map<std::pair<std::size_t, std::size_t>, Monomial> pending_;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, TermOrder order) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const std::size_t arity = generators.front().arity();

  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  for (const auto& g : generators) {
    require_arity(g, arity);
    if (g.is_zero()) continue;
    Polynomial monic = make_monic(g, order);
    if (std::find(basis.begin(), basis.end(), monic) != basis.end()) continue;
    leads.push_back(leading_monomial(monic, order));
    basis.push_back(std::move(monic));
  }
  if (basis.empty()) throw std::invalid_argument("all generators are zero");

  PairQueue queue(order);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) queue.add(i, j, leads[i].lcm(leads[j]));
  }

  while (!queue.empty()) {
    const Pair pair = queue.pop();
    if (leads[pair.i].coprime(leads[pair.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = leads[k].divides(pair.lcm) && !queue.contains(pair.i, k) &&
              !queue.contains(pair.j, k);
    }
    if (chain) continue;

    Polynomial r = normal_form(s_polynomial(basis[pair.i], basis[pair.j], order), basis, order);
    if (r.is_zero()) continue;
    r = make_monic(r, order);
    const std::size_t t = basis.size();
    leads.push_back(leading_monomial(r, order));
    basis.push_back(std::move(r));
    for (std::size_t i = 0; i < t; ++i) queue.add(i, t, leads[i].lcm(leads[t]));
  }

  return reduce_basis(basis, order);
}

GroebnerBasis reduce_basis(std::span<const Polynomial> basis, TermOrder order) {
  if (basis.empty()) throw std::invalid_argument("cannot reduce an empty basis");
  const std::size_t arity = basis.front().arity();

  std::vector<std::pair<Monomial, Polynomial>> sorted;
  for (const auto& g : basis) {
    require_arity(g, arity);
    if (g.is_zero()) continue;
    Polynomial monic = make_monic(g, order);
    Monomial lm = leading_monomial(monic, order);
    sorted.emplace_back(std::move(lm), std::move(monic));
  }
  std::stable_sort(sorted.begin(), sorted.end(), [order](const auto& a, const auto& b) {
    return compare_monomials(a.first, b.first, order) < 0;
  });

  // Keep a minimal basis: smaller leading monomials are seen first.
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (auto& [lm, g] : sorted) {
    const bool redundant = std::any_of(minimal_leads.begin(), minimal_leads.end(),
                                       [&](const Monomial& m) { return m.divides(lm); });
    if (redundant) continue;
    minimal_leads.push_back(lm);
    minimal.push_back(std::move(g));
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial head = Polynomial::term(minimal_leads[i], 1);
    const Polynomial tail = minimal[i] - head;
    reduced.push_back(others.empty() ? minimal[i] : head + normal_form(tail, others, order));
  }
  return GroebnerBasis(arity, order, std::move(reduced), true);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis).is_zero();
}

}  // namespace sdist
