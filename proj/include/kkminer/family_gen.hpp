#pragma once

#include <kkminer/generalized.hpp>
#include <kkminer/itemset.hpp>

#include <random>
#include <vector>

namespace kkminer {

// Seeded generators for the verification sweeps: small random pattern
// families and valid level-family extensions built from their own
// candidate sets (so the closure and disjointness preconditions hold by
// construction).

struct FamilyGenConfig {
  unsigned max_items = 12;
  unsigned max_patterns = 80;
  unsigned min_k = 2;
  unsigned max_k = 5;
  unsigned max_extra_levels = 3;
};

std::vector<ItemSet> random_family(std::mt19937_64& rng,
                                   const FamilyGenConfig& cfg, unsigned k);

/// Random valid (L, I) stack on top of a random base family.
LevelFamilies random_level_families(std::mt19937_64& rng,
                                    const FamilyGenConfig& cfg, unsigned k);

}  // namespace kkminer
