#pragma once

#include <kkminer/count.hpp>

#include <vector>

namespace kkminer {

struct CanonicalTerm {
  Count m;     // upper index
  unsigned i;  // lower index
};

// The k-canonical representation of a count n: the unique greedy sum
// n = C(m_k,k) + C(m_{k-1},k-1) + ... + C(m_r,r) with m_k > m_{k-1} > ...
// and m_i >= i. Empty term list for n = 0.
struct CanonicalRep {
  unsigned k = 0;
  std::vector<CanonicalTerm> terms;  // lower index descending from k to r

  Count reconstruct() const;
};

/// Greedy decomposition: m_k maximal with C(m_k,k) <= n, recurse on the
/// remainder at k-1 until it reaches zero.
CanonicalRep canonical_rep(const Count& n, unsigned k);

}  // namespace kkminer
