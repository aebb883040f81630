#pragma once

#include "sdist/point_set.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace sdist {

/// T_1 x ... x T_n; each T_i needs at least two distinct values.
struct BoxSpec {
  std::vector<std::vector<Rational>> coordinate_sets;
};

/// All permutations of n distinct values, as vectors.
struct PermutationSpec {
  std::vector<Rational> values;
};

/// 0/1 vectors of length n with exactly d ones.
struct UniformLayerSpec {
  std::size_t n = 0;
  std::size_t d = 0;
};

/// 0/1 vectors of length n with an even number of ones.
struct EvenWeightSpec {
  std::size_t n = 0;
};

/// `count` distinct rational points on |x - center|^2 = radius_squared.
/// radius_squared must be the square of a rational; points come from the
/// inverse stereographic projection of random rational parameters drawn
/// from a generator seeded with `seed`.
struct SphereSampleSpec {
  Point center;
  Rational radius_squared;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

using FamilySpec =
    std::variant<BoxSpec, PermutationSpec, UniformLayerSpec, EvenWeightSpec, SphereSampleSpec>;

/// Throws std::invalid_argument on an invalid spec.
PointSet generate_family(const FamilySpec& spec);

}  // namespace sdist
