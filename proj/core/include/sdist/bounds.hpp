#pragma once

#include "sdist/polynomial.hpp"
#include "sdist/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace sdist {

// Upper bounds on the size of s-distance sets. Parameters are checked and
// std::invalid_argument is thrown on values outside a formula's domain;
// HypothesisError marks a mathematical precondition that fails.

/// C(n+s, s): any s-distance set in R^n. Requires n, s >= 1.
Integer bbs_bound(long n, long s);

/// C(n+s-1, s) + C(n+s-2, s-1): s-distance sets on the unit sphere S^{n-1}.
/// Requires n >= 2, s >= 1.
Integer dgs_bound(long n, long s);

/// Hilbert function of a degree-d hypersurface: C(n+s, n) - C(n+s-d, n) for
/// s >= d, C(n+s, n) below that. Requires n, d, s >= 1.
Integer hypersurface_bound(long n, long d, long s);

/// d*s - d(d-3)/2 for a plane curve of degree d. Requires d >= 1; throws
/// HypothesisError when s < d.
Integer plane_curve_bound(long d, long s);

/// sum_{i=0}^{2p-1} C(n+s-i-1, s-i) on a union of p spheres when s >= 2p,
/// checked against C(n+s, n) - C(n+s-2p, n); the BBS bound when s < 2p.
/// Requires n >= 2, p >= 1, s >= 1.
Integer sphere_union_bound(long n, long p, long s);

/// Closed sum form of the sphere-union bound (no fallback, no check).
Integer sphere_union_sum(long n, long p, long s);
/// Difference form C(n+s, n) - C(n+s-2p, n).
Integer sphere_union_difference(long n, long p, long s);

/// Number of monomials with every exponent <= q-1 and total degree <= s.
/// Requires n >= 1, q >= 2, s >= 0.
Integer box_bound(long n, long q, long s);

/// Number of n-term compositions of j with parts in {0, ..., q-1}.
Integer extended_binomial(long n, long j, long q);

/// I_n(0), ..., I_n(n(n-1)/2): permutations of n symbols by inversion count.
struct InversionTable {
  long n;
  std::vector<Integer> counts;
};

InversionTable inversion_numbers(long n);

/// sum_{i<=s} I_n(i); saturates at n! once s >= n(n-1)/2.
Integer permutation_bound(long n, long s);

/// C(n, s) for s-distance sets of 0/1 vectors of weight d. Requires
/// 0 <= d <= n; throws HypothesisError unless 0 <= s <= min(d, n-d).
Integer uniform_bound(long n, long d, long s);

/// Affine Hilbert function of the ideal at s (empty list = zero ideal).
Integer general_bound(std::span<const Polynomial> generators, std::size_t arity, long s);

enum class Family { BBS, DGS, Hypersurface, SphereUnion, Box, Permutation, Uniform, GeneralIdeal };

std::string to_string(Family family);
/// Accepts the CLI spellings: bbs, dgs, hypersurface, spheres, box, perm,
/// uniform, general. Throws std::invalid_argument otherwise.
Family parse_family(const std::string& name);

/// A bound family with every parameter except s fixed. `parameters` uses
/// the keys n, d, p, q; GeneralIdeal uses `generators` (and n as arity).
struct BoundFamily {
  Family family;
  std::map<std::string, long> parameters;
  std::vector<Polynomial> generators;

  long parameter(const std::string& key) const;
};

struct BoundReport {
  Family family;
  std::map<std::string, long> parameters;  // includes s
  Integer value;
  std::string formula_text;
};

BoundReport evaluate_bound(const BoundFamily& family, long s);

}  // namespace sdist
