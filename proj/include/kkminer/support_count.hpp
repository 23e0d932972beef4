#pragma once

#include <kkminer/pattern_trie.hpp>

#include <cstdint>
#include <vector>

namespace kkminer {

// One levelwise pass: every stored path contained in a transaction gets +1.
// Counters live in a flat slot array so the parallel variant can give each
// thread its own block and sum them afterwards; the trie itself stays
// read-only during a pass.

/// Gives every node with depth in [min_depth, max_depth] a counting slot.
/// Returns the number of slots.
std::uint32_t assign_slots(TrieNode& root, unsigned min_depth,
                           unsigned max_depth);

/// Serial reference implementation.
std::vector<std::uint64_t> count_supports_serial(
    const TrieNode& root, const std::vector<ItemSet>& transactions,
    std::uint32_t slot_count, unsigned max_depth);

/// OpenMP kernel: partitions transactions across threads and merges the
/// per-thread counter blocks. Bit-identical to the serial counts.
std::vector<std::uint64_t> count_supports_parallel(
    const TrieNode& root, const std::vector<ItemSet>& transactions,
    std::uint32_t slot_count, unsigned max_depth);

/// Writes the counters back into node.support and retires the slots.
void store_supports(TrieNode& root, const std::vector<std::uint64_t>& counts,
                    unsigned max_depth);

}  // namespace kkminer
