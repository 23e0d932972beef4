#include <kkminer/support_count.hpp>

#include <span>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kkminer {

namespace {

void assign_walk(TrieNode& node, unsigned depth, unsigned min_depth,
                 unsigned max_depth, std::uint32_t& next) {
  if (depth >= min_depth && depth <= max_depth) node.slot = next++;
  if (depth == max_depth) return;
  for (TrieNode& c : node.children)
    assign_walk(c, depth + 1, min_depth, max_depth, next);
}

void count_walk(const TrieNode& node, std::span<const Item> tail,
                unsigned depth, unsigned max_depth, std::uint64_t* counts) {
  if (node.slot != kNoSlot) ++counts[node.slot];
  if (depth == max_depth) return;
  const auto& kids = node.children;
  std::size_t ci = 0, ti = 0;
  while (ci < kids.size() && ti < tail.size()) {
    const Item cv = kids[ci].item;
    const Item tv = tail[ti];
    if (cv < tv) {
      ++ci;
    } else if (cv > tv) {
      ++ti;
    } else {
      count_walk(kids[ci], tail.subspan(ti + 1), depth + 1, max_depth, counts);
      ++ci;
      ++ti;
    }
  }
}

}  // namespace

std::uint32_t assign_slots(TrieNode& root, unsigned min_depth,
                           unsigned max_depth) {
  std::uint32_t next = 0;
  assign_walk(root, 0, min_depth, max_depth, next);
  return next;
}

std::vector<std::uint64_t> count_supports_serial(
    const TrieNode& root, const std::vector<ItemSet>& transactions,
    std::uint32_t slot_count, unsigned max_depth) {
  std::vector<std::uint64_t> counts(slot_count, 0);
  for (const ItemSet& txn : transactions)
    count_walk(root, txn, 0, max_depth, counts.data());
  return counts;
}

std::vector<std::uint64_t> count_supports_parallel(
    const TrieNode& root, const std::vector<ItemSet>& transactions,
    std::uint32_t slot_count, unsigned max_depth) {
#ifndef _OPENMP
  return count_supports_serial(root, transactions, slot_count, max_depth);
#else
  std::vector<std::uint64_t> counts(slot_count, 0);
  const std::int64_t n = static_cast<std::int64_t>(transactions.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(slot_count, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i)
      count_walk(root, transactions[i], 0, max_depth, local.data());
#pragma omp critical
    {
      for (std::uint32_t j = 0; j < slot_count; ++j) counts[j] += local[j];
    }
  }
  return counts;
#endif
}

void store_supports(TrieNode& root, const std::vector<std::uint64_t>& counts,
                    unsigned max_depth) {
  std::function<void(TrieNode&, unsigned)> walk = [&](TrieNode& node,
                                                      unsigned depth) {
    if (node.slot != kNoSlot) {
      node.support = counts[node.slot];
      node.slot = kNoSlot;
    }
    if (depth == max_depth) return;
    for (TrieNode& c : node.children) walk(c, depth + 1);
  };
  walk(root, 0);
}

}  // namespace kkminer
