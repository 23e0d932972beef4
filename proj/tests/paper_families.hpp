#pragma once

// Worked pattern families shared across the test suites.

#include <kkminer/generalized.hpp>
#include <kkminer/itemset.hpp>

#include <algorithm>
#include <vector>

namespace testfam {

using kkminer::Item;
using kkminer::ItemSet;

inline std::vector<ItemSet> all_k_subsets(const ItemSet& universe, unsigned k) {
  std::vector<ItemSet> out;
  if (k > universe.size()) return out;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    ItemSet s;
    for (unsigned i = 0; i < k; ++i) s.push_back(universe[idx[i]]);
    out.push_back(std::move(s));
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == universe.size() - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// 13 three-sets: the first 13 in colex order.
inline std::vector<ItemSet> family13() {
  return {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5},
          {1, 3, 5}, {2, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5},
          {1, 2, 6}, {1, 3, 6}, {2, 3, 6}};
}

inline std::vector<ItemSet> family13_c4() {
  return {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5},
          {1, 3, 4, 5}, {2, 3, 4, 5}, {1, 2, 3, 6}};
}

// 21 three-sets: {5,7,8}, {5,8,9}, and the 19 distinct 3-subsets of
// {1,2,3,4,5} and {3,4,5,6,7}.
inline std::vector<ItemSet> family21() {
  std::vector<ItemSet> fam = all_k_subsets({1, 2, 3, 4, 5}, 3);
  for (ItemSet& s : all_k_subsets({3, 4, 5, 6, 7}, 3)) fam.push_back(s);
  fam.push_back({5, 7, 8});
  fam.push_back({5, 8, 9});
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

// All 3-subsets of {1..6} with {1,2,3,4} and {3,4,5,6} known infrequent.
inline kkminer::LevelFamilies six_item_families() {
  kkminer::LevelFamilies fam;
  fam.base_level = 3;
  fam.L.push_back(all_k_subsets({1, 2, 3, 4, 5, 6}, 3));
  fam.L.push_back({});
  fam.I.push_back({});
  fam.I.push_back({{1, 2, 3, 4}, {3, 4, 5, 6}});
  return fam;
}

}  // namespace testfam
