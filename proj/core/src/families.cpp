#include "sdist/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace sdist {

namespace {

PointSet generate(const BoxSpec& spec) {
  const std::size_t n = spec.coordinate_sets.size();
  if (n == 0) throw std::invalid_argument("box needs at least one coordinate set");
  for (const auto& t : spec.coordinate_sets) {
    if (std::set<Rational>(t.begin(), t.end()).size() != t.size() || t.size() < 2) {
      throw std::invalid_argument("box coordinate sets need at least 2 distinct values");
    }
  }
  std::vector<Point> points;
  std::vector<std::size_t> index(n, 0);
  while (true) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = spec.coordinate_sets[i][index[i]];
    points.push_back(std::move(p));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++index[i] < spec.coordinate_sets[i].size()) break;
      index[i] = 0;
      if (i == 0) return PointSet(n, std::move(points));
    }
  }
}

PointSet generate(const PermutationSpec& spec) {
  if (spec.values.empty()) throw std::invalid_argument("permutation family needs values");
  Point values = spec.values;
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw std::invalid_argument("permutation family needs distinct values");
  }
  std::vector<Point> points;
  do {
    points.push_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return PointSet(values.size(), std::move(points));
}

std::vector<Point> binary_vectors(std::size_t n, auto keep) {
  if (n == 0 || n > 24) throw std::invalid_argument("0/1 families need 1 <= n <= 24");
  std::vector<Point> points;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto weight = static_cast<std::size_t>(__builtin_popcount(mask));
    if (!keep(weight)) continue;
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> (n - 1 - i)) & 1u;
    points.push_back(std::move(p));
  }
  return points;
}

PointSet generate(const UniformLayerSpec& spec) {
  if (spec.d > spec.n) throw std::invalid_argument("uniform layer needs 0 <= d <= n");
  return PointSet(spec.n, binary_vectors(spec.n, [&](std::size_t w) { return w == spec.d; }));
}

PointSet generate(const EvenWeightSpec& spec) {
  return PointSet(spec.n, binary_vectors(spec.n, [](std::size_t w) { return w % 2 == 0; }));
}

Rational rational_sqrt(const Rational& value) {
  if (sgn(value) <= 0 || !mpz_perfect_square_p(value.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den_mpz_t())) {
    throw std::invalid_argument("sphere radius squared must be the square of a positive rational");
  }
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  return make_rational(num, den);
}

PointSet generate(const SphereSampleSpec& spec) {
  const std::size_t n = spec.center.size();
  if (n == 0) throw std::invalid_argument("sphere center needs at least one coordinate");
  const Rational radius = rational_sqrt(spec.radius_squared);

  auto place = [&](const std::vector<Rational>& unit) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = spec.center[i] + radius * unit[i];
    return p;
  };

  std::vector<Point> points;
  if (n == 1) {
    if (spec.count > 2) throw std::invalid_argument("a 0-sphere has only 2 points");
    for (int sign : {-1, 1}) {
      if (points.size() < spec.count) points.push_back(place({Rational(sign)}));
    }
    return PointSet(n, std::move(points));
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> numerator(-12, 12);
  std::uniform_int_distribution<long> denominator(1, 12);
  std::set<Point> seen;
  const std::size_t max_attempts = 1000 + 100 * spec.count;
  for (std::size_t attempt = 0; points.size() < spec.count; ++attempt) {
    if (attempt == max_attempts) throw std::invalid_argument("could not sample enough distinct sphere points");
    // Inverse stereographic projection from (0, ..., 0, 1):
    // t -> (2t, |t|^2 - 1) / (|t|^2 + 1).
    std::vector<Rational> t(n - 1);
    Rational norm = 0;
    for (auto& ti : t) {
      ti = make_rational(numerator(rng), denominator(rng));
      norm += ti * ti;
    }
    std::vector<Rational> unit(n);
    for (std::size_t i = 0; i + 1 < n; ++i) unit[i] = 2 * t[i] / (norm + 1);
    unit[n - 1] = (norm - 1) / (norm + 1);
    Point p = place(unit);
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  return PointSet(n, std::move(points));
}

}  // namespace

PointSet generate_family(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return generate(s); }, spec);
}

}  // namespace sdist
