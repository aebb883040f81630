#pragma once

#include "sdist/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sdist {

using Point = std::vector<Rational>;

/// Finite set of pairwise distinct points of Q^n, kept in insertion order.
class PointSet {
 public:
  /// Throws std::invalid_argument on a duplicate point or a coordinate count
  /// different from `arity`.
  PointSet(std::size_t arity, std::vector<Point> points);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  /// The sub-configuration at `indices` (which must be distinct).
  PointSet subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t arity_;
  std::vector<Point> points_;
};

Rational squared_distance(const Point& a, const Point& b);

}  // namespace sdist
