#pragma once

#include "sdist/point_set.hpp"

#include <cstddef>
#include <vector>

namespace sdist {

/// Largest candidate count searched without a size cap.
inline constexpr std::size_t kSearchGuard = 24;

struct SearchResult {
  std::size_t max_size = 0;
  std::vector<std::size_t> witness;  // indices into the candidate set, ascending
};

/// Largest subset of `candidates` with at most s distinct nonzero squared
/// distances, by depth-first search with distance-set pruning. A nonzero
/// `size_cap` stops the search once a subset of that size is found. Throws
/// std::invalid_argument when more than kSearchGuard candidates are given
/// without a size cap.
SearchResult brute_force_max_sdist(const PointSet& candidates, std::size_t s, std::size_t size_cap = 0);

}  // namespace sdist
