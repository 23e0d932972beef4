#pragma once

#include <kkminer/itemset.hpp>
#include <kkminer/kk.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace kkminer {

inline constexpr std::uint32_t kNoSlot = 0xffffffffu;

struct TrieNode {
  Item item = 0;
  std::uint32_t slot = kNoSlot;  // transient counting slot, see support_count
  std::uint64_t support = 0;
  std::vector<TrieNode> children;  // sorted by item

  const TrieNode* find(Item x) const;
  TrieNode* find(Item x);
  TrieNode& get_or_add(Item x);
};

// All bound values for one pattern family, produced by a single
// depth-first traversal. Vectors are indexed by p-1 (value for level k+p)
// and trimmed once the bound reaches zero for good.
struct BoundSet {
  unsigned level = 0;  // k
  Count family_size = 0;
  std::vector<Count> kk;
  std::vector<Count> kk_star;
  Count mu = 0;       // k-1 when the family is empty
  Count mu_star = 0;  // likewise
  Count kk_total = 0;
  Count kk_star_total = 0;

  Count kk_at(unsigned target_level) const;
  Count kk_star_at(unsigned target_level) const;
};

/// Evaluates every bound for the family of `level`-sets stored below
/// `root` (the node itself acts as a depth-0 sentinel). Nodes deeper than
/// `level` are ignored. nullptr means the empty family.
BoundSet evaluate_bounds(const TrieNode* root, unsigned level);

// Read-only view of a subtrie interpreted as its own pattern family; this
// is what projecting by a top-level item returns.
struct TrieView {
  const TrieNode* node = nullptr;  // nullptr: empty family
  unsigned level = 0;              // size of the sets in this family
};

BoundSet evaluate_bounds(const TrieView& view);
TrieView project(const TrieView& view, Item x);

// Prefix trie over itemsets. Each stored set is a strictly increasing
// root-to-node path; the subtrie under a top-level child x is the
// projection {s - {x} | s in L, x = min s} of the stored family.
class PatternTrie {
 public:
  void insert(std::span<const Item> s);
  bool contains(std::span<const Item> s) const;
  const TrieNode* find(std::span<const Item> s) const;

  std::uint64_t count_at_level(unsigned level) const;
  std::size_t node_count() const;
  unsigned max_depth() const;
  bool empty() const { return root_.children.empty(); }

  const TrieNode& root() const { return root_; }
  /// Mutable access for the mining loop; drops cached bound values.
  TrieNode& mutable_root();

  TrieView view(unsigned level) const { return {&root_, level}; }
  TrieView project(unsigned level, Item x) const;

  /// Cached family bounds for the depth-`level` patterns.
  const BoundSet& bounds(unsigned level) const;

  Count kk_star(unsigned level, unsigned p) const;
  Count mu_star(unsigned level) const;
  Count kk_star_total(unsigned level) const;

  /// Join-plus-prune candidate generation from the depth-`level` patterns.
  std::vector<ItemSet> generate_candidates(unsigned level) const;

  /// In-place variant: inserts the generated (level+1)-candidates under
  /// their join parents. Returns how many were added.
  std::uint64_t extend_level(unsigned level);

  /// Join-only diagnostic bound on the next level's candidate count.
  Count obvious_bound(unsigned level) const;

  /// Removes depth-`level` nodes with support below minsup; returns the
  /// removed patterns.
  std::vector<ItemSet> prune_level(unsigned level, std::uint64_t minsup);

  /// Removes every node deeper than `level` (combine rollback).
  void erase_below(unsigned level);

  std::vector<ItemSet> collect(unsigned level) const;
  void for_each_at_level(
      unsigned level,
      const std::function<void(const ItemSet&, const TrieNode&)>& fn) const;

 private:
  void invalidate();

  TrieNode root_;
  mutable std::map<unsigned, BoundSet> bound_cache_;
};

}  // namespace kkminer
