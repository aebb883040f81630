#pragma once

#include "sdist/rational.hpp"

namespace sdist {

/// C(n, k) by the multiplicative formula. Zero when k < 0, n < 0 or k > n.
Integer binomial(long long n, long long k);

/// n!
Integer factorial(unsigned long n);

}  // namespace sdist
