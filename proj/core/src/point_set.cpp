#include "sdist/point_set.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace sdist {

PointSet::PointSet(std::size_t arity, std::vector<Point> points)
    : arity_(arity), points_(std::move(points)) {
  std::set<Point> seen;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != arity_) {
      throw std::invalid_argument("point " + std::to_string(i + 1) + " has " +
                                  std::to_string(points_[i].size()) + " coordinates, expected " +
                                  std::to_string(arity_));
    }
    if (!seen.insert(points_[i]).second) {
      throw std::invalid_argument("duplicate point at index " + std::to_string(i + 1));
    }
  }
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(points_.at(i));
  return PointSet(arity_, std::move(out));
}

Rational squared_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point dimension mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational d = a[i] - b[i];
    total += d * d;
  }
  return total;
}

}  // namespace sdist
