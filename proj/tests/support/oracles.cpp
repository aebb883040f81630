#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sdist::oracle {

namespace {

void extend(std::size_t n, unsigned budget, std::vector<unsigned>& current,
            std::vector<std::vector<unsigned>>& out) {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= budget; ++e) {
    current.push_back(e);
    extend(n, budget - e, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<unsigned>> exponent_vectors(std::size_t n, unsigned s) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  extend(n, s, current, out);
  return out;
}

std::size_t gauss_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t principal_hilbert_by_rank(const Polynomial& f, unsigned s) {
  const std::size_t n = f.arity();
  const auto space = exponent_vectors(n, s);
  const std::size_t d = f.degree().value();
  if (s < d) return space.size();
  std::map<std::vector<unsigned>, std::size_t> column;
  for (std::size_t i = 0; i < space.size(); ++i) column[space[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& shift : exponent_vectors(n, static_cast<unsigned>(s - d))) {
    std::vector<Rational> row(space.size(), Rational(0));
    for (const auto& [m, c] : f.terms()) {
      std::vector<unsigned> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = m[i] + shift[i];
      row[column.at(e)] += c;
    }
    rows.push_back(std::move(row));
  }
  return space.size() - gauss_rank(std::move(rows));
}

std::size_t point_hilbert_by_rank(const PointSet& points, unsigned s) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : exponent_vectors(points.arity(), s)) {
    std::vector<Rational> row;
    for (const auto& p : points.points()) {
      Rational v = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) v *= p[i];
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return gauss_rank(std::move(rows));
}

std::map<std::vector<unsigned>, Rational> expand_product(
    const std::map<std::vector<unsigned>, Rational>& a, const std::map<std::vector<unsigned>, Rational>& b) {
  std::map<std::vector<unsigned>, Rational> out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<unsigned long> inversion_histogram(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<unsigned long> hist(n * (n - 1) / 2 + 1, 0);
  do {
    unsigned inv = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    }
    ++hist[inv];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hist;
}

unsigned long count_compositions(unsigned n, unsigned j, unsigned q) {
  unsigned long total = 0;
  std::vector<unsigned> digits(n, 0);
  while (true) {
    if (std::accumulate(digits.begin(), digits.end(), 0u) == j) ++total;
    std::size_t i = 0;
    while (i < n && ++digits[i] == q) digits[i++] = 0;
    if (i == n) return total;
  }
}

unsigned long count_box_monomials(unsigned n, unsigned q, unsigned s) {
  unsigned long total = 0;
  for (unsigned j = 0; j <= s; ++j) total += count_compositions(n, j, q);
  return total;
}

unsigned long long pascal(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<unsigned long long> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<unsigned long long> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

std::size_t exhaustive_max_sdist(const PointSet& candidates, std::size_t s) {
  const std::size_t m = candidates.size();
  if (m > 20) throw std::invalid_argument("exhaustive oracle limited to 20 candidates");
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    std::set<Rational> distances;
    for (std::size_t i = 0; i < m && distances.size() <= s; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (mask >> j & 1u) distances.insert(squared_distance(candidates[i], candidates[j]));
      }
    }
    if (distances.size() <= s) best = size;
  }
  return best;
}

}  // namespace sdist::oracle
