#pragma once

#include <kkminer/count.hpp>

namespace kkminer {

/// C(n, k), exact at any magnitude. Returns 0 for k > n.
Count binomial(unsigned long n, unsigned long k);

/// C(n, k) for arbitrary-precision n (upper indices of canonical
/// representations can be astronomically large at small k).
Count binomial(const Count& n, unsigned long k);

}  // namespace kkminer
