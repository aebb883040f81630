#include "sdist/verify.hpp"

#include "sdist/errors.hpp"
#include "sdist/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sdist {

SquaredDistanceSet squared_distance_set(const PointSet& points) {
  if (points.size() < 2) throw std::invalid_argument("distance set needs at least 2 points");
  std::set<Rational> values;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      values.insert(squared_distance(points[i], points[j]));
    }
  }
  return {std::vector<Rational>(values.begin(), values.end())};
}

RationalMatrix pp_matrix(const PointSet& points, const Polynomial& p) {
  const std::size_t n = points.arity();
  if (p.arity() != 2 * n) {
    throw std::invalid_argument("pp polynomial must have arity " + std::to_string(2 * n) + ", got " +
                                std::to_string(p.arity()));
  }
  const std::size_t m = points.size();
  RationalMatrix out(m, m);
  Point joined(2 * n);
  for (std::size_t a = 0; a < m; ++a) {
    std::copy(points[a].begin(), points[a].end(), joined.begin());
    for (std::size_t b = 0; b < m; ++b) {
      std::copy(points[b].begin(), points[b].end(), joined.begin() + static_cast<std::ptrdiff_t>(n));
      out(a, b) = p.evaluate(joined);
    }
  }
  return out;
}

Polynomial swap_arguments(const Polynomial& p) {
  if (p.arity() % 2 != 0) throw std::invalid_argument("swap_arguments needs an even arity");
  const std::size_t n = p.arity() / 2;
  Polynomial::TermMap swapped;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Exponent> e(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = m[n + i];
      e[n + i] = m[i];
    }
    swapped.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(p.arity(), std::move(swapped));
}

Polynomial canonical_distance_polynomial(const PointSet& points) {
  const std::size_t n = points.arity();
  Polynomial norm(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial diff = Polynomial::variable(2 * n, i) - Polynomial::variable(2 * n, n + i);
    norm = norm + diff * diff;
  }
  Polynomial product = Polynomial::constant(2 * n, 1);
  for (const Rational& t2 : squared_distance_set(points).values) {
    product = product * (Polynomial::constant(2 * n, t2) - norm);
  }
  return product;
}

RationalMatrix canonical_pp_matrix(const PointSet& points) {
  const auto distances = squared_distance_set(points).values;
  const std::size_t m = points.size();
  RationalMatrix out(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Rational d2 = squared_distance(points[a], points[b]);
      Rational value = 1;
      for (const Rational& t2 : distances) value *= t2 - d2;
      out(a, b) = value;
    }
  }
  return out;
}

std::size_t point_set_hilbert(const PointSet& points, unsigned s) {
  const GroebnerBasis basis = vanishing_ideal(points, TermOrder::DegLex);
  return standard_monomials_leq(basis, s).monomials.size();
}

namespace {

PpCheckReport check_matrix(const PointSet& points, const RationalMatrix& m, unsigned s) {
  PpCheckReport report;
  report.s = s;
  report.h_value = point_set_hilbert(points, s);
  report.rank = rank(m);
  report.symmetric_input = m.is_symmetric();
  report.inertia = inertia(symmetric_part(m));
  report.rank_ok = report.rank <= 2 * report.h_value;
  report.inertia_ok = std::max(report.inertia.r_plus, report.inertia.r_minus) <= report.h_value;
  return report;
}

}  // namespace

PpCheckReport check_pp_theorem(const PointSet& points, const Polynomial& p, unsigned s) {
  if (points.empty()) throw std::invalid_argument("pp check needs a nonempty point set");
  const Degree degree = p.degree();
  if (degree.is_finite() && degree.value() > 2ull * s + 1) {
    throw HypothesisError("pp polynomial has degree " + std::to_string(degree.value()) +
                          " > 2s+1 = " + std::to_string(2 * s + 1));
  }
  return check_matrix(points, pp_matrix(points, p), s);
}

PpCheckReport check_canonical_pp(const PointSet& points) {
  const auto s = static_cast<unsigned>(squared_distance_set(points).size());
  return check_matrix(points, canonical_pp_matrix(points), s);
}

namespace {

void require_on_unit_sphere(const PointSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rational norm = 0;
    for (const auto& x : points[i]) norm += x * x;
    if (norm != 1) {
      throw HypothesisError("point " + std::to_string(i + 1) + " is not on the unit sphere");
    }
  }
}

void require_in_box(const PointSet& points, long q) {
  for (std::size_t c = 0; c < points.arity(); ++c) {
    std::set<Rational> values;
    for (const auto& p : points.points()) values.insert(p[c]);
    if (values.size() > static_cast<std::size_t>(q)) {
      throw HypothesisError("coordinate " + std::to_string(c + 1) + " takes " +
                            std::to_string(values.size()) + " values, more than q = " +
                            std::to_string(q));
    }
  }
}

void require_permutations(const PointSet& points) {
  Point reference = points[0];
  std::sort(reference.begin(), reference.end());
  if (std::adjacent_find(reference.begin(), reference.end()) != reference.end()) {
    throw HypothesisError("permutation family needs distinct coordinate values");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    Point sorted = points[i];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != reference) {
      throw HypothesisError("point " + std::to_string(i + 1) +
                            " is not a permutation of the first point");
    }
  }
}

void require_uniform_layer(const PointSet& points, long d) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    long ones = 0;
    for (const auto& x : points[i]) {
      if (x == 1) {
        ++ones;
      } else if (x != 0) {
        throw HypothesisError("point " + std::to_string(i + 1) + " is not a 0/1 vector");
      }
    }
    if (ones != d) {
      throw HypothesisError("point " + std::to_string(i + 1) + " has weight " +
                            std::to_string(ones) + ", expected " + std::to_string(d));
    }
  }
}

void require_vanishing(const PointSet& points, const std::vector<Polynomial>& generators) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].arity() != points.arity()) {
      throw std::invalid_argument("generator " + std::to_string(g + 1) + " has arity " +
                                  std::to_string(generators[g].arity()) + ", points have " +
                                  std::to_string(points.arity()));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!is_zero(generators[g].evaluate(points[i]))) {
        throw HypothesisError("generator " + std::to_string(g + 1) + " does not vanish at point " +
                              std::to_string(i + 1));
      }
    }
  }
}

}  // namespace

DistanceBoundReport check_distance_bound(const PointSet& points, const BoundFamily& family) {
  if (points.empty()) throw std::invalid_argument("distance bound check needs a nonempty point set");
  BoundFamily resolved = family;
  const long n = static_cast<long>(points.arity());
  auto [it, inserted] = resolved.parameters.try_emplace("n", n);
  if (!inserted && it->second != n) {
    throw std::invalid_argument("family parameter n = " + std::to_string(it->second) +
                                " does not match the point dimension " + std::to_string(n));
  }

  switch (resolved.family) {
    case Family::DGS: require_on_unit_sphere(points); break;
    case Family::Box: require_in_box(points, resolved.parameter("q")); break;
    case Family::Permutation: require_permutations(points); break;
    case Family::Uniform: require_uniform_layer(points, resolved.parameter("d")); break;
    default: break;
  }
  require_vanishing(points, resolved.generators);

  DistanceBoundReport report;
  report.size = points.size();
  report.s = points.size() < 2 ? 0 : squared_distance_set(points).size();
  const bool needs_positive_s = resolved.family == Family::BBS || resolved.family == Family::DGS ||
                                resolved.family == Family::Hypersurface ||
                                resolved.family == Family::SphereUnion;
  if (report.s == 0 && needs_positive_s) {
    // A single point; every affine Hilbert function of a proper ideal has h(0) = 1.
    report.bound = BoundReport{resolved.family, resolved.parameters, 1, "h(0) = 1"};
    report.bound.parameters["s"] = 0;
  } else {
    report.bound = evaluate_bound(resolved, static_cast<long>(report.s));
  }
  report.holds = Integer(static_cast<unsigned long>(report.size)) <= report.bound.value;
  return report;
}

bool standard_monomials_within_distance_count(const PointSet& points) {
  const std::size_t s = points.size() < 2 ? 0 : squared_distance_set(points).size();
  const GroebnerBasis basis = vanishing_ideal(points, TermOrder::DegLex);
  // All of Sm(I(A)) has degree <= |A| - 1.
  const auto all = standard_monomials_leq(basis, static_cast<unsigned>(points.size()));
  return std::all_of(all.monomials.begin(), all.monomials.end(),
                     [s](const Monomial& m) { return m.total_degree() <= s; });
}

}  // namespace sdist
