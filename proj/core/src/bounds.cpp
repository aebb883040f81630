#include "sdist/bounds.hpp"

#include "sdist/combinatorics.hpp"
#include "sdist/errors.hpp"
#include "sdist/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdist {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

std::string binom_text(long a, long b) {
  return "C(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Integer bbs_bound(long n, long s) {
  require(n >= 1 && s >= 1, "bbs bound needs n >= 1 and s >= 1");
  return binomial(n + s, s);
}

Integer dgs_bound(long n, long s) {
  require(n >= 2 && s >= 1, "dgs bound needs n >= 2 and s >= 1");
  return binomial(n + s - 1, s) + binomial(n + s - 2, s - 1);
}

Integer hypersurface_bound(long n, long d, long s) {
  require(n >= 1 && d >= 1 && s >= 1, "hypersurface bound needs n, d, s >= 1");
  if (s < d) return binomial(n + s, n);
  return binomial(n + s, n) - binomial(n + s - d, n);
}

Integer plane_curve_bound(long d, long s) {
  require(d >= 1, "plane curve bound needs d >= 1");
  if (s < d) throw HypothesisError("plane curve bound needs s >= d");
  // d(d-3) is always even.
  return Integer(d) * s - Integer(d * (d - 3) / 2);
}

Integer sphere_union_sum(long n, long p, long s) {
  Integer total = 0;
  for (long i = 0; i <= 2 * p - 1; ++i) total += binomial(n + s - i - 1, s - i);
  return total;
}

Integer sphere_union_difference(long n, long p, long s) {
  return binomial(n + s, n) - binomial(n + s - 2 * p, n);
}

Integer sphere_union_bound(long n, long p, long s) {
  require(n >= 2 && p >= 1 && s >= 1, "sphere union bound needs n >= 2, p >= 1, s >= 1");
  if (s < 2 * p) return bbs_bound(n, s);
  const Integer sum = sphere_union_sum(n, p, s);
  const Integer difference = sphere_union_difference(n, p, s);
  if (sum != difference) {
    throw std::logic_error("sphere union sum " + to_string(sum) + " != difference form " +
                           to_string(difference));
  }
  return sum;
}

Integer box_bound(long n, long q, long s) {
  require(n >= 1, "box bound needs n >= 1");
  require(q >= 2, "box bound needs q >= 2");
  require(s >= 0, "box bound needs s >= 0");
  // ways[b] = number of exponent vectors over the variables seen so far
  // with total degree <= b.
  std::vector<Integer> ways(static_cast<std::size_t>(s) + 1, Integer(1));
  for (long var = 0; var < n; ++var) {
    std::vector<Integer> next(ways.size(), Integer(0));
    for (long b = 0; b <= s; ++b) {
      for (long a = 0; a <= std::min(q - 1, b); ++a) next[b] += ways[b - a];
    }
    ways = std::move(next);
  }
  return ways[s];
}

Integer extended_binomial(long n, long j, long q) {
  require(n >= 1, "extended binomial needs n >= 1");
  require(q >= 2, "extended binomial needs q >= 2");
  if (j < 0 || j > n * (q - 1)) return 0;
  // Coefficients of (1 + z + ... + z^{q-1})^k for k = 1..n.
  std::vector<Integer> coeffs{Integer(1)};
  for (long k = 0; k < n; ++k) {
    std::vector<Integer> next(coeffs.size() + q - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (long part = 0; part < q; ++part) next[i + part] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs[j];
}

InversionTable inversion_numbers(long n) {
  require(n >= 1, "inversion numbers need n >= 1");
  std::vector<Integer> counts{Integer(1)};
  for (long k = 2; k <= n; ++k) {
    std::vector<Integer> next(counts.size() + k - 1, Integer(0));
    for (std::size_t i = 0; i < counts.size(); ++i) {
      for (long e = 0; e < k; ++e) next[i + e] += counts[i];
    }
    counts = std::move(next);
  }
  return {n, std::move(counts)};
}

Integer permutation_bound(long n, long s) {
  require(s >= 0, "permutation bound needs s >= 0");
  const InversionTable table = inversion_numbers(n);
  Integer total = 0;
  const long last = std::min<long>(s, static_cast<long>(table.counts.size()) - 1);
  for (long i = 0; i <= last; ++i) total += table.counts[i];
  return total;
}

Integer uniform_bound(long n, long d, long s) {
  require(n >= 0 && d >= 0 && d <= n, "uniform bound needs 0 <= d <= n");
  if (s < 0 || s > std::min(d, n - d)) {
    throw HypothesisError("uniform bound needs 0 <= s <= min(d, n-d) = " +
                          std::to_string(std::min(d, n - d)) + ", got s = " + std::to_string(s));
  }
  return binomial(n, s);
}

Integer general_bound(std::span<const Polynomial> generators, std::size_t arity, long s) {
  require(s >= 0, "general bound needs s >= 0");
  return hilbert_function(generators, arity, static_cast<unsigned>(s));
}

std::string to_string(Family family) {
  switch (family) {
    case Family::BBS: return "bbs";
    case Family::DGS: return "dgs";
    case Family::Hypersurface: return "hypersurface";
    case Family::SphereUnion: return "spheres";
    case Family::Box: return "box";
    case Family::Permutation: return "perm";
    case Family::Uniform: return "uniform";
    case Family::GeneralIdeal: return "general";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::BBS, Family::DGS, Family::Hypersurface, Family::SphereUnion, Family::Box,
                   Family::Permutation, Family::Uniform, Family::GeneralIdeal}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown bound family '" + name + "'");
}

long BoundFamily::parameter(const std::string& key) const {
  auto it = parameters.find(key);
  if (it == parameters.end()) {
    throw std::invalid_argument("family " + to_string(family) + " needs parameter " + key);
  }
  return it->second;
}

BoundReport evaluate_bound(const BoundFamily& family, long s) {
  BoundReport report{family.family, family.parameters, 0, {}};
  report.parameters["s"] = s;
  const long n = family.parameter("n");
  switch (family.family) {
    case Family::BBS:
      report.value = bbs_bound(n, s);
      report.formula_text = binom_text(n + s, s);
      break;
    case Family::DGS:
      report.value = dgs_bound(n, s);
      report.formula_text = binom_text(n + s - 1, s) + " + " + binom_text(n + s - 2, s - 1);
      break;
    case Family::Hypersurface: {
      const long d = family.parameter("d");
      report.value = hypersurface_bound(n, d, s);
      report.formula_text = s >= d ? binom_text(n + s, n) + " - " + binom_text(n + s - d, n)
                                   : binom_text(n + s, n);
      break;
    }
    case Family::SphereUnion: {
      const long p = family.parameter("p");
      report.value = sphere_union_bound(n, p, s);
      if (s >= 2 * p) {
        report.formula_text = "sum_{i=0}^{" + std::to_string(2 * p - 1) + "} C(" +
                              std::to_string(n + s - 1) + "-i," + std::to_string(s) + "-i) = " +
                              binom_text(n + s, n) + " - " + binom_text(n + s - 2 * p, n);
      } else {
        report.formula_text = binom_text(n + s, s) + " (s < 2p)";
      }
      break;
    }
    case Family::Box: {
      const long q = family.parameter("q");
      report.value = box_bound(n, q, s);
      report.formula_text = "#{x^a : a_i <= " + std::to_string(q - 1) + ", |a| <= " +
                            std::to_string(s) + "} in " + std::to_string(n) + " variables";
      break;
    }
    case Family::Permutation:
      report.value = permutation_bound(n, s);
      report.formula_text = "sum_{i=0}^{" + std::to_string(s) + "} I_" + std::to_string(n) + "(i)";
      break;
    case Family::Uniform: {
      const long d = family.parameter("d");
      report.value = uniform_bound(n, d, s);
      report.formula_text = binom_text(n, s);
      break;
    }
    case Family::GeneralIdeal:
      report.value = general_bound(family.generators, static_cast<std::size_t>(n), s);
      report.formula_text = "h_{Q[x]/I}(" + std::to_string(s) + ")";
      break;
  }
  return report;
}

}  // namespace sdist
