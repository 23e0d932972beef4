#include <kkminer/oracle.hpp>

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace kkminer {
namespace oracle {

namespace {

using SetIndex = std::unordered_set<ItemSet, ItemSetHash>;

std::vector<Item> universe_of(const std::vector<ItemSet>& L) {
  std::vector<Item> u;
  for (const auto& s : L) u.insert(u.end(), s.begin(), s.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

// Visits all size-r subsets of universe (by index combination).
template <typename Fn>
void for_each_subset(const std::vector<Item>& universe, unsigned r, Fn&& fn) {
  if (r > universe.size()) return;
  std::vector<unsigned> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i;
  ItemSet s(r);
  for (;;) {
    for (unsigned i = 0; i < r; ++i) s[i] = universe[idx[i]];
    fn(s);
    // advance to next index combination
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == universe.size() - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool all_subsets_of_size_in(const ItemSet& s, unsigned r, const SetIndex& in) {
  // All size-r subsets of s, via complement when that is smaller work.
  bool ok = true;
  for_each_subset(s, r, [&](const ItemSet& sub) {
    if (!ok) return;
    if (!in.count(sub)) ok = false;
  });
  return ok;
}

}  // namespace

std::vector<ItemSet> colex_family(std::size_t n, unsigned k) {
  assert(k >= 1);
  std::vector<ItemSet> out;
  out.reserve(n);
  if (n == 0) return out;
  ItemSet cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i + 1;
  out.push_back(cur);
  while (out.size() < n) {
    // successor in colex: bump the lowest position that can grow without
    // colliding with the element above it, reset everything below
    unsigned i = 0;
    while (i + 1 < k && cur[i] + 1 == cur[i + 1]) ++i;
    ++cur[i];
    for (unsigned j = 0; j < i; ++j) cur[j] = j + 1;
    out.push_back(cur);
  }
  return out;
}

std::vector<ItemSet> brute_force_candidates(const std::vector<ItemSet>& L,
                                            unsigned p) {
  std::vector<ItemSet> out;
  if (L.empty() || p == 0) return out;
  const unsigned k = static_cast<unsigned>(L.front().size());
  SetIndex index(L.begin(), L.end());
  const std::vector<Item> universe = universe_of(L);
  for_each_subset(universe, k + p, [&](const ItemSet& cand) {
    if (all_subsets_of_size_in(cand, k, index)) out.push_back(cand);
  });
  return out;
}

std::vector<ItemSet> single_step_candidates(const std::vector<ItemSet>& F) {
  std::vector<ItemSet> out;
  if (F.empty()) return out;
  const unsigned j = static_cast<unsigned>(F.front().size());
  SetIndex index(F.begin(), F.end());

  std::vector<ItemSet> sorted = F;
  std::sort(sorted.begin(), sorted.end());
  // join sets sharing their j-1 smallest items, then prune
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (!std::equal(sorted[a].begin(), sorted[a].end() - 1,
                      sorted[b].begin()))
        break;  // sorted order: once prefixes diverge they stay diverged
      ItemSet cand = sorted[a];
      cand.push_back(sorted[b].back());
      if (all_subsets_of_size_in(cand, j, index)) out.push_back(cand);
    }
  }
  return out;
}

unsigned maxsize(const std::vector<ItemSet>& L) {
  if (L.empty()) return 0;
  unsigned level = static_cast<unsigned>(L.front().size());
  std::vector<ItemSet> cur = L;
  for (;;) {
    std::vector<ItemSet> next = single_step_candidates(cur);
    if (next.empty()) return level;
    cur = std::move(next);
    ++level;
  }
}

}  // namespace oracle
}  // namespace kkminer
