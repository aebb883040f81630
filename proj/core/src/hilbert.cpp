#include "sdist/hilbert.hpp"

#include "sdist/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sdist {

Integer binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= static_cast<long>(n - k + i);
    result /= static_cast<long>(i);  // exact: result is C(n - k + i, i) here
  }
  return result;
}

Integer factorial(unsigned long n) {
  Integer result = 1;
  for (unsigned long i = 2; i <= n; ++i) result *= i;
  return result;
}

std::vector<std::size_t> StandardMonomialSet::degree_profile() const {
  std::vector<std::size_t> counts(degree_cap + 1, 0);
  for (const auto& m : monomials) ++counts[m.total_degree()];
  return counts;
}

namespace {

// Depth-first walk over exponent vectors of total degree <= budget. Raising
// an exponent of a non-standard monomial keeps it non-standard, so each
// exponent loop stops at the first monomial that hits the staircase.
void enumerate(const GroebnerBasis& basis, std::vector<Monomial::Exponent>& exps, std::size_t var,
               unsigned budget, std::vector<Monomial>& out) {
  const std::size_t n = exps.size();
  for (unsigned e = 0; e <= budget; ++e) {
    exps[var] = e;
    Monomial m(exps);
    if (!basis.is_standard(m)) break;
    if (var + 1 == n) {
      out.push_back(std::move(m));
    } else {
      enumerate(basis, exps, var + 1, budget - e, out);
    }
  }
  exps[var] = 0;
}

}  // namespace

StandardMonomialSet standard_monomials_leq(const GroebnerBasis& basis, unsigned s) {
  StandardMonomialSet set{basis.order(), basis.arity(), s, {}};
  if (basis.arity() == 0) {
    if (!basis.is_unit_ideal()) set.monomials.push_back(Monomial::one(0));
    return set;
  }
  std::vector<Monomial::Exponent> exps(basis.arity(), 0);
  enumerate(basis, exps, 0, s, set.monomials);
  std::sort(set.monomials.begin(), set.monomials.end(), MonomialLess{basis.order()});
  return set;
}

HilbertTable::HilbertTable(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empty Hilbert table");
}

HilbertTable hilbert_table(const GroebnerBasis& deglex_basis, unsigned s_max) {
  if (deglex_basis.order() != TermOrder::DegLex) {
    throw std::invalid_argument("Hilbert function needs a deglex Groebner basis");
  }
  std::vector<Integer> values;
  values.reserve(s_max + 1);
  if (deglex_basis.is_zero_ideal()) {
    const auto n = static_cast<long long>(deglex_basis.arity());
    for (unsigned s = 0; s <= s_max; ++s) values.push_back(binomial(n + s, n));
    return HilbertTable(std::move(values));
  }
  const auto profile = standard_monomials_leq(deglex_basis, s_max).degree_profile();
  Integer running = 0;
  for (unsigned s = 0; s <= s_max; ++s) {
    running += static_cast<unsigned long>(profile[s]);
    values.push_back(running);
  }
  return HilbertTable(std::move(values));
}

namespace {

GroebnerBasis deglex_basis_of(std::span<const Polynomial> generators, std::size_t arity) {
  for (const auto& g : generators) {
    if (g.arity() != arity) throw std::invalid_argument("generator arity mismatch");
  }
  const bool all_zero =
      std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_zero(); });
  if (all_zero) return GroebnerBasis(arity, TermOrder::DegLex, {}, true);
  return buchberger(generators, TermOrder::DegLex);
}

}  // namespace

HilbertTable hilbert_table(std::span<const Polynomial> generators, std::size_t arity, unsigned s_max) {
  return hilbert_table(deglex_basis_of(generators, arity), s_max);
}

Integer hilbert_function(const GroebnerBasis& deglex_basis, unsigned s) {
  return hilbert_table(deglex_basis, s)(s);
}

Integer hilbert_function(std::span<const Polynomial> generators, std::size_t arity, unsigned s) {
  return hilbert_function(deglex_basis_of(generators, arity), s);
}

namespace {

struct EchelonRow {
  std::size_t pivot;
  std::vector<Rational> values;       // evaluation vector, pivot entry 1
  std::vector<Rational> combination;  // coefficients over standard monomials
};

std::vector<Rational> evaluate_monomial(const Monomial& m, const PointSet& points) {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const auto& p : points.points()) {
    Rational value = 1;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      for (Monomial::Exponent e = 0; e < m[i]; ++e) value *= p[i];
    }
    out.push_back(std::move(value));
  }
  return out;
}

}  // namespace

GroebnerBasis vanishing_ideal(const PointSet& points, TermOrder order) {
  if (points.empty()) throw std::invalid_argument("vanishing ideal of an empty point set");
  const std::size_t n = points.arity();

  std::set<Monomial, MonomialLess> candidates(MonomialLess{order});
  std::set<Monomial> seen;
  candidates.insert(Monomial::one(n));
  seen.insert(Monomial::one(n));

  std::vector<Monomial> standard;
  std::vector<EchelonRow> rows;
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;

  while (!candidates.empty()) {
    const Monomial t = *candidates.begin();
    candidates.erase(candidates.begin());
    const bool multiple = std::any_of(leads.begin(), leads.end(),
                                      [&](const Monomial& lm) { return lm.divides(t); });
    if (multiple) continue;

    std::vector<Rational> v = evaluate_monomial(t, points);
    const std::size_t self = standard.size();
    std::vector<Rational> combination(self + 1, Rational(0));
    combination[self] = 1;
    for (const auto& row : rows) {
      const Rational c = v[row.pivot];
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * row.values[k];
      for (std::size_t k = 0; k < row.combination.size(); ++k) {
        combination[k] -= c * row.combination[k];
      }
    }

    const auto pivot = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
    if (pivot == v.end()) {
      // t minus its interpolant on the standard monomials vanishes on every point.
      Polynomial::TermMap terms;
      for (std::size_t k = 0; k < self; ++k) {
        if (!is_zero(combination[k])) terms.emplace(standard[k], combination[k]);
      }
      terms.emplace(t, 1);
      leads.push_back(t);
      basis.emplace_back(n, std::move(terms));
      continue;
    }

    const Rational inverse = 1 / *pivot;
    for (auto& x : v) x *= inverse;
    for (auto& x : combination) x *= inverse;
    rows.push_back({static_cast<std::size_t>(pivot - v.begin()), std::move(v), std::move(combination)});
    standard.push_back(t);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = t * Monomial::variable(n, i);
      if (seen.insert(next).second) candidates.insert(std::move(next));
    }
  }
  return GroebnerBasis(n, order, std::move(basis), true);
}

namespace {

using Univariate = std::vector<Rational>;  // constant term first

Univariate multiply(const Univariate& a, const Univariate& b) {
  Univariate out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Smallest d such that the (d+1)-th forward differences of `tail` vanish,
// provided at least two of them are checked. nullopt if no such d.
std::optional<std::size_t> fitted_degree(std::span<const Integer> tail,
                                         std::vector<std::vector<Integer>>& table) {
  table.assign(1, std::vector<Integer>(tail.begin(), tail.end()));
  while (table.back().size() >= 2) {
    const auto& prev = table.back();
    std::vector<Integer> next(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
    const bool zero = std::all_of(next.begin(), next.end(), [](const Integer& x) { return sgn(x) == 0; });
    if (zero) {
      if (next.size() < 2) return std::nullopt;
      return table.size() - 1;
    }
    table.push_back(std::move(next));
  }
  return std::nullopt;
}

}  // namespace

HilbertPolynomialEstimate estimate_hilbert_polynomial(std::span<const Integer> values, unsigned s_lo) {
  HilbertPolynomialEstimate est;
  est.s_lo = s_lo;
  est.s_hi = static_cast<unsigned>(s_lo + values.size() - 1);
  est.values.assign(values.begin(), values.end());
  if (values.empty()) {
    est.diagnostic = "empty window";
    return est;
  }

  std::vector<std::vector<Integer>> table;
  for (std::size_t start = 0; start < values.size(); ++start) {
    const auto degree = fitted_degree(values.subspan(start), table);
    if (!degree) continue;
    const std::size_t d = *degree;

    // Newton form anchored at s0: P(s) = sum_k D^k h(s0) * C(s - s0, k).
    const Rational s0 = static_cast<unsigned long>(s_lo + start);
    Univariate poly{Rational(0)};
    Univariate falling{Rational(1)};
    for (std::size_t k = 0; k <= d; ++k) {
      const Rational scale = Rational(table[k][0]) / Rational(factorial(k));
      if (poly.size() < falling.size()) poly.resize(falling.size(), Rational(0));
      for (std::size_t i = 0; i < falling.size(); ++i) poly[i] += scale * falling[i];
      falling = multiply(falling, Univariate{-(s0 + static_cast<unsigned long>(k)), Rational(1)});
    }
    while (poly.size() > 1 && is_zero(poly.back())) poly.pop_back();

    const Rational leading = Rational(poly.back() * Rational(factorial(d)));
    if (leading.get_den() != 1) {
      est.diagnostic = "leading coefficient times d! is not an integer";
      return est;
    }
    est.stabilized = true;
    est.stable_from = static_cast<unsigned>(s_lo + start);
    est.dimension = d;
    est.degree = leading.get_num();
    est.coefficients = std::move(poly);
    return est;
  }
  est.diagnostic = "finite differences did not stabilize over s = " + std::to_string(est.s_lo) +
                   ".." + std::to_string(est.s_hi);
  return est;
}

HilbertPolynomialEstimate hilbert_poly_estimate(std::span<const Polynomial> generators,
                                                std::size_t arity, unsigned s_lo, unsigned s_hi) {
  if (s_hi < s_lo) throw std::invalid_argument("s_hi must not be below s_lo");
  const HilbertTable table = hilbert_table(generators, arity, s_hi);
  std::span<const Integer> all(table.values());
  return estimate_hilbert_polynomial(all.subspan(s_lo), s_lo);
}

}  // namespace sdist
