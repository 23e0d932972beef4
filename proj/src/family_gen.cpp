#include <kkminer/family_gen.hpp>

#include <kkminer/oracle.hpp>

#include <algorithm>

namespace kkminer {

std::vector<ItemSet> random_family(std::mt19937_64& rng,
                                   const FamilyGenConfig& cfg, unsigned k) {
  std::uniform_int_distribution<unsigned> items_dist(k + 1, cfg.max_items);
  const unsigned universe = items_dist(rng);

  // all k-subsets of {1..universe}
  std::vector<ItemSet> all;
  ItemSet cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    all.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == universe - k + 1 + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }

  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t limit = std::min<std::size_t>(all.size(), cfg.max_patterns);
  std::uniform_int_distribution<std::size_t> count_dist(1, limit);
  all.resize(count_dist(rng));
  return all;
}

LevelFamilies random_level_families(std::mt19937_64& rng,
                                    const FamilyGenConfig& cfg, unsigned k) {
  LevelFamilies fam;
  fam.base_level = k;
  fam.L.push_back(random_family(rng, cfg, k));
  fam.I.emplace_back();  // nothing known infrequent at the base

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (unsigned extra = 0; extra < cfg.max_extra_levels; ++extra) {
    // candidates of the current top level are the only sets that can
    // legally enter the next L or I level
    std::vector<ItemSet> pool = oracle::single_step_candidates(fam.L.back());
    if (pool.empty()) break;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<ItemSet> next_l, next_i;
    for (const ItemSet& s : pool) {
      const double r = coin(rng);
      if (r < 0.4)
        next_l.push_back(s);
      else if (r < 0.6)
        next_i.push_back(s);
    }
    if (next_l.empty() && next_i.empty()) break;
    std::sort(next_l.begin(), next_l.end());
    std::sort(next_i.begin(), next_i.end());
    fam.L.push_back(std::move(next_l));
    fam.I.push_back(std::move(next_i));
    if (fam.L.back().empty()) break;  // nothing to extend further
  }
  return fam;
}

}  // namespace kkminer
