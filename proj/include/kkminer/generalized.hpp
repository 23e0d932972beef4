#pragma once

#include <kkminer/count.hpp>
#include <kkminer/itemset.hpp>
#include <kkminer/pattern_trie.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kkminer {

// Bounds that fold in knowledge gathered beyond the base level: families
// of sets already known frequent (L_{k+1}..L_{k+q}) or known infrequent
// (I_k..I_{k+q}). A generalized candidate of size k+p is a set not in
// L_{k+p} or I_{k+p}, whose k-subsets all lie in the base family, and none
// of whose subsets of size > k is known infrequent.

struct LevelFamilies {
  unsigned base_level = 0;              // k
  std::vector<std::vector<ItemSet>> L;  // L[p] holds the (k+p)-sets; L[0] = base
  std::vector<std::vector<ItemSet>> I;  // I[p] holds the (k+p)-sets

  const std::vector<ItemSet>& level_L(unsigned p) const;
  const std::vector<ItemSet>& level_I(unsigned p) const;
};

/// Checks the structural preconditions: every (k+p-1)-subset of every
/// member of L_{k+p} (and of I_{k+p}) is in L_{k+p-1}, and L/I are disjoint
/// per level. Returns a description of the first offender, nullopt when ok.
std::optional<std::string> validate(const LevelFamilies& families);

// --- cardinality-only chain -------------------------------------------
// sizes_L[p] = |L_{k+p}| (sizes_L[0] is the base size), sizes_I[p] =
// |I_{k+p}|; levels beyond the spans count as 0. Subtractions clamp at 0
// so the API stays total on inconsistent inputs.

Count gkk_bound(std::span<const Count> sizes_L, std::span<const Count> sizes_I,
                unsigned k, unsigned p);
Count g_mu(std::span<const Count> sizes_L, std::span<const Count> sizes_I,
           unsigned k);
Count gkk_total(std::span<const Count> sizes_L, std::span<const Count> sizes_I,
                unsigned k);

// --- structure-aware chain --------------------------------------------

struct GeneralizedBounds {
  unsigned level = 0;
  std::vector<Count> gkk;       // cardinality chain values, [p-1]
  std::vector<Count> gkk_star;  // recursive values, [p-1], trailing zeros cut
  Count g_mu = 0;
  Count g_mu_star = 0;
  Count gkk_total = 0;
  Count gkk_star_total = 0;

  Count gkk_at(unsigned target_level) const;
  Count gkk_star_at(unsigned target_level) const;
};

/// Full evaluation over an already-built base trie. Side sets carry their
/// level implicitly as their size: upper_frequent holds known-frequent sets
/// larger than the base, infrequent holds known-infrequent sets of size >=
/// base_level. Used directly by the mining loop.
GeneralizedBounds evaluate_generalized(const TrieNode* base_root,
                                       unsigned base_level,
                                       std::vector<ItemSet> upper_frequent,
                                       std::vector<ItemSet> infrequent);

/// Convenience overload: builds the base trie from families.L[0]. Throws
/// std::invalid_argument when validate() reports a violation.
GeneralizedBounds evaluate_generalized(const LevelFamilies& families);

Count gkk_star(const LevelFamilies& families, unsigned p);
Count g_mu_star(const LevelFamilies& families);
Count gkk_star_total(const LevelFamilies& families);

// --- oracles ------------------------------------------------------------

/// Direct enumeration of the generalized candidates of size k+p over the
/// items occurring in the base family. Desk-scale only.
std::vector<ItemSet> gen_candidates_enum(const LevelFamilies& families,
                                         unsigned p);

/// The same set computed by the level recursion
///   C_{k+1} = C(L_k) \ (L_{k+1} u I_{k+1})
///   C_{k+p} = C(C_{k+p-1} u L_{k+p-1}) \ (L_{k+p} u I_{k+p})
/// which must agree with gen_candidates_enum on valid families.
std::vector<ItemSet> gen_candidates_recursion(const LevelFamilies& families,
                                              unsigned p);

}  // namespace kkminer
