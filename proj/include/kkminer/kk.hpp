#pragma once

#include <kkminer/canonical.hpp>
#include <kkminer/count.hpp>

namespace kkminer {

// Cardinality-only upper bounds on candidate pattern counts. Given n
// frequent patterns of size k, kk_bound(n,k,p) bounds the number of
// (k+p)-sets all of whose k-subsets can be among the n. Tight: the first
// n k-sets in colex order achieve it exactly.

/// Sum of C(m_i, i+p) over the k-canonical representation of n. Terms with
/// m_i < i+p vanish. 0 for n = 0.
Count kk_bound(const Count& n, unsigned k, unsigned p);
Count kk_bound(const CanonicalRep& rep, unsigned p);

/// Upper bound on the largest achievable candidate size: the leading upper
/// index m_k. By convention k-1 for n = 0 (an empty level admits nothing).
/// Equals k + min{p : kk_bound(n,k,p) = 0} - 1 for n >= 1.
Count mu(const Count& n, unsigned k);
Count mu(const CanonicalRep& rep);

/// Bound on the total number of candidates over all future levels:
/// sum of kk_bound(n,k,p) for p = 1 .. mu - k.
Count kk_total(const Count& n, unsigned k);
Count kk_total(const CanonicalRep& rep);

}  // namespace kkminer
