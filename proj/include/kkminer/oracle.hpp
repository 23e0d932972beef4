#pragma once

#include <kkminer/itemset.hpp>

#include <cstddef>
#include <vector>

namespace kkminer {
namespace oracle {

// Deliberately naive ground truth for the bound machinery. Everything here
// enumerates explicitly and is only meant for desk-scale inputs; none of it
// sits on the mining hot path.

/// The first n k-subsets of {1,2,3,...} in colexicographic order. These
/// prefixes are the extremal families: their candidate counts meet the
/// cardinality bounds exactly at every level.
std::vector<ItemSet> colex_family(std::size_t n, unsigned k);

/// All (k+p)-subsets of the items occurring in L whose every k-subset is in
/// L. L must hold k-sets of one common size k.
std::vector<ItemSet> brute_force_candidates(const std::vector<ItemSet>& L,
                                            unsigned p);

/// Largest k+p such that brute_force_candidates(L, p) is nonempty, or k if
/// every extension dies immediately. Computed by chaining single-step
/// candidate generation, which is equivalent to the direct definition.
unsigned maxsize(const std::vector<ItemSet>& L);

/// Single chain step: all (j+1)-sets whose every j-subset is in F.
std::vector<ItemSet> single_step_candidates(const std::vector<ItemSet>& F);

}  // namespace oracle
}  // namespace kkminer
