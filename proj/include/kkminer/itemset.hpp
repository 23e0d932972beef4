#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kkminer {

using Item = std::uint32_t;

// A pattern: strictly increasing sequence of item ids.
using ItemSet = std::vector<Item>;

bool is_sorted_unique(std::span<const Item> s);

/// Colexicographic order: write each set with members decreasing and
/// compare those strings lexicographically. For equal sizes this compares
/// from the largest element down.
bool colex_less(std::span<const Item> a, std::span<const Item> b);

/// Size-then-colex order used for pattern listings.
bool size_colex_less(const ItemSet& a, const ItemSet& b);

bool is_subset(std::span<const Item> sub, std::span<const Item> super);

std::string format_itemset(std::span<const Item> s);

struct ItemSetHash {
  std::size_t operator()(const ItemSet& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ s.size();
    for (Item v : s) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace kkminer
