#include <kkminer/generalized.hpp>

#include <kkminer/binomial.hpp>
#include <kkminer/kk.hpp>
#include <kkminer/oracle.hpp>

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace kkminer {

namespace {

const std::vector<ItemSet> kEmptyFamily;

using SetIndex = std::unordered_set<ItemSet, ItemSetHash>;

// ----- cardinality chain -------------------------------------------------
//
// v_1 = KK_k^{k+1}(|L_k|) - |L_{k+1}| - |I_{k+1}|
// v_p = KK_{k+p-1}^{k+p}(v_{p-1} + |L_{k+p-1}|) - |L_{k+p}| - |I_{k+p}|
// clamped at 0. Beyond the known levels the recursion is a pure KK
// iteration, which by the composition identity collapses into the
// canonical representation of the last explicit value; mu and the total
// of that tail then come out in closed form.

struct SizeChain {
  unsigned k = 0;
  std::vector<Count> values;  // v_1 .. v_{q+1}
  CanonicalRep tail_rep;      // of values.back() at level k+q+1, if nonzero
};

Count at_or_zero(std::span<const Count> v, std::size_t idx) {
  return idx < v.size() ? v[idx] : Count(0);
}

SizeChain build_chain(const Count& base_size, unsigned k,
                      std::span<const Count> upper_L,
                      std::span<const Count> upper_I) {
  // upper_L[p-1] = |L_{k+p}|, upper_I[p-1] = |I_{k+p}|
  SizeChain chain;
  chain.k = k;
  const std::size_t q = std::max(upper_L.size(), upper_I.size());
  Count v = kk_bound(base_size, k, 1);
  v -= at_or_zero(upper_L, 0);
  v -= at_or_zero(upper_I, 0);
  if (v < 0) v = 0;
  chain.values.push_back(v);
  for (std::size_t p = 2; p <= q + 1; ++p) {
    Count pool = chain.values.back() + at_or_zero(upper_L, p - 2);
    v = kk_bound(pool, k + static_cast<unsigned>(p) - 1, 1);
    v -= at_or_zero(upper_L, p - 1);
    v -= at_or_zero(upper_I, p - 1);
    if (v < 0) v = 0;
    chain.values.push_back(std::move(v));
  }
  if (chain.values.back() > 0)
    chain.tail_rep = canonical_rep(chain.values.back(),
                                   k + static_cast<unsigned>(chain.values.size()));
  return chain;
}

Count chain_value(const SizeChain& c, unsigned p) {
  if (p == 0) return 0;
  if (p <= c.values.size()) return c.values[p - 1];
  if (c.tail_rep.terms.empty()) return 0;
  return kk_bound(c.tail_rep, p - static_cast<unsigned>(c.values.size()));
}

// Level of the last nonzero chain value, or base-level conventions.
Count chain_mu(const SizeChain& c, const Count& base_size) {
  if (!c.tail_rep.terms.empty()) return mu(c.tail_rep);
  for (std::size_t p = c.values.size(); p >= 1; --p)
    if (c.values[p - 1] > 0) return Count(c.k) + p;
  return base_size > 0 ? Count(c.k) : Count(c.k) - 1;
}

Count chain_total(const SizeChain& c) {
  Count total = 0;
  for (const Count& v : c.values) total += v;
  if (!c.tail_rep.terms.empty()) total += kk_total(c.tail_rep);
  return total;
}

// Chain values materialized out to the last nonzero entry.
std::vector<Count> chain_materialize(const SizeChain& c,
                                     const Count& base_size) {
  Count last = chain_mu(c, base_size);
  std::vector<Count> out;
  if (last <= c.k) return out;
  Count span = last - c.k;
  assert(span.fits_ulong_p());
  const unsigned long n = span.get_ui();
  out.reserve(n);
  for (unsigned long p = 1; p <= n; ++p)
    out.push_back(chain_value(c, static_cast<unsigned>(p)));
  return out;
}

std::vector<Count> sizes_by_level(const std::vector<std::vector<ItemSet>>& fam,
                                  std::size_t from) {
  std::vector<Count> out;
  for (std::size_t p = from; p < fam.size(); ++p)
    out.push_back(Count(static_cast<unsigned long>(fam[p].size())));
  return out;
}

// ----- structural recursion ----------------------------------------------

// Side knowledge at one trie node, sets in original item ids. Levels are
// implicit in the set sizes; everything at or below the node's base level
// has no effect on the chain and is dropped.
struct SideSets {
  std::vector<ItemSet> upper_L;  // known frequent, sizes > base
  std::vector<ItemSet> upper_I;  // known infrequent, sizes > base
};

bool subtree_contains(const TrieNode* node, std::span<const Item> s) {
  for (Item x : s) {
    node = node->find(x);
    if (node == nullptr) return false;
  }
  return true;
}

bool all_base_subsets_stored(const ItemSet& t, unsigned base,
                             const TrieNode* node) {
  // every base-sized subset of t must be a stored path under node
  if (t.size() < base) return false;
  std::vector<unsigned> idx(base);
  for (unsigned i = 0; i < base; ++i) idx[i] = i;
  ItemSet sub(base);
  for (;;) {
    for (unsigned i = 0; i < base; ++i) sub[i] = t[idx[i]];
    if (!subtree_contains(node, sub)) return false;
    int i = static_cast<int>(base) - 1;
    while (i >= 0 && idx[i] == t.size() - base + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = i + 1; j < base; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

// Keeps only infrequent sets whose exclusion the chain may safely count:
// base-closure must hold under this node, supersets of another kept
// infrequent set are redundant (the smaller set already excludes them),
// and sets also claimed frequent are contradictory and dropped.
void filter_sides(SideSets& s, unsigned base, const TrieNode* node) {
  std::erase_if(s.upper_L,
                [&](const ItemSet& t) { return t.size() <= base; });
  std::erase_if(s.upper_I,
                [&](const ItemSet& t) { return t.size() <= base; });

  SetIndex freq(s.upper_L.begin(), s.upper_L.end());
  std::sort(s.upper_I.begin(), s.upper_I.end(), size_colex_less);
  std::vector<ItemSet> kept;
  for (const ItemSet& t : s.upper_I) {
    if (freq.count(t)) continue;
    if (!all_base_subsets_stored(t, base, node)) continue;
    bool dominated = false;
    for (const ItemSet& u : kept) {
      if (u.size() < t.size() && is_subset(u, t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(t);
  }
  s.upper_I = std::move(kept);
}

// Projection by a top-level item x. Frequent sets survive only when x is
// their minimum (the set then loses x). Infrequent sets additionally carry
// over unchanged when their minimum lies above x: they still exclude the
// same candidates inside this branch.
SideSets project_sides(const SideSets& s, Item x) {
  SideSets out;
  for (const ItemSet& t : s.upper_L) {
    if (t.front() == x) out.upper_L.emplace_back(t.begin() + 1, t.end());
  }
  for (const ItemSet& t : s.upper_I) {
    if (t.front() == x)
      out.upper_I.emplace_back(t.begin() + 1, t.end());
    else if (t.front() > x)
      out.upper_I.push_back(t);
  }
  return out;
}

std::vector<Count> side_sizes(const std::vector<ItemSet>& sets, unsigned base,
                              std::size_t& max_offset) {
  std::vector<Count> out;
  for (const ItemSet& t : sets) {
    if (t.size() <= base) continue;
    const std::size_t p = t.size() - base;
    if (out.size() < p) out.resize(p, Count(0));
    ++out[p - 1];
    max_offset = std::max(max_offset, p);
  }
  return out;
}

struct GsEval {
  std::uint64_t desc = 0;
  std::vector<Count> vals;  // gKK* per p, trailing zeros trimmed
};

Count gs_child_value(const GsEval& c, std::size_t p) {
  return p - 1 < c.vals.size() ? c.vals[p - 1] : Count(0);
}

void trim_trailing_zeros(std::vector<Count>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

GsEval eval_gstar(const TrieNode& node, unsigned depth, unsigned k,
                  const SideSets& sides) {
  GsEval ev;
  if (depth == k) {
    ev.desc = 1;
    return ev;
  }
  const unsigned base = k - depth;

  if (base == 1) {
    ev.desc = node.children.size();
    if (ev.desc == 0) return ev;
    std::size_t dummy = 0;
    SizeChain chain =
        build_chain(Count(ev.desc), 1, side_sizes(sides.upper_L, 1, dummy),
                    side_sizes(sides.upper_I, 1, dummy));
    ev.vals = chain_materialize(chain, Count(ev.desc));
    return ev;
  }

  std::vector<GsEval> kids;
  kids.reserve(node.children.size());
  const bool no_sides = sides.upper_L.empty() && sides.upper_I.empty();
  for (const TrieNode& c : node.children) {
    if (no_sides) {
      kids.push_back(eval_gstar(c, depth + 1, k, sides));
    } else {
      SideSets child_sides = project_sides(sides, c.item);
      filter_sides(child_sides, base - 1, &c);
      kids.push_back(eval_gstar(c, depth + 1, k, child_sides));
    }
  }
  for (const GsEval& ce : kids) ev.desc += ce.desc;
  if (ev.desc == 0) return ev;

  std::size_t dummy = 0;
  SizeChain chain =
      build_chain(Count(ev.desc), base, side_sizes(sides.upper_L, base, dummy),
                  side_sizes(sides.upper_I, base, dummy));
  std::vector<Count> cap = chain_materialize(chain, Count(ev.desc));
  ev.vals.reserve(cap.size());
  for (std::size_t p = 1; p <= cap.size(); ++p) {
    const Count& arm = cap[p - 1];
    Count sum = 0;
    bool capped = false;
    for (const GsEval& ce : kids) {
      sum += gs_child_value(ce, p);
      if (sum >= arm) {
        capped = true;
        break;
      }
    }
    ev.vals.push_back(capped ? arm : std::move(sum));
  }
  trim_trailing_zeros(ev.vals);
  return ev;
}

std::vector<ItemSet> flatten(const std::vector<std::vector<ItemSet>>& fams,
                             std::size_t from) {
  std::vector<ItemSet> out;
  for (std::size_t p = from; p < fams.size(); ++p)
    out.insert(out.end(), fams[p].begin(), fams[p].end());
  return out;
}

}  // namespace

const std::vector<ItemSet>& LevelFamilies::level_L(unsigned p) const {
  return p < L.size() ? L[p] : kEmptyFamily;
}

const std::vector<ItemSet>& LevelFamilies::level_I(unsigned p) const {
  return p < I.size() ? I[p] : kEmptyFamily;
}

std::optional<std::string> validate(const LevelFamilies& families) {
  const unsigned k = families.base_level;
  auto size_check = [&](const std::vector<std::vector<ItemSet>>& fams,
                        const char* tag) -> std::optional<std::string> {
    for (std::size_t p = 0; p < fams.size(); ++p) {
      for (const ItemSet& s : fams[p]) {
        if (!is_sorted_unique(s))
          return std::string(tag) + "[" + std::to_string(k + p) +
                 "] member {" + format_itemset(s) + "} is not a sorted set";
        if (s.size() != k + p)
          return std::string(tag) + "[" + std::to_string(k + p) +
                 "] member {" + format_itemset(s) + "} has size " +
                 std::to_string(s.size());
      }
    }
    return std::nullopt;
  };
  if (auto err = size_check(families.L, "L")) return err;
  if (auto err = size_check(families.I, "I")) return err;

  const std::size_t levels = std::max(families.L.size(), families.I.size());
  std::vector<SetIndex> l_index(levels);
  for (std::size_t p = 0; p < families.L.size(); ++p)
    l_index[p] = SetIndex(families.L[p].begin(), families.L[p].end());

  auto closure_check = [&](const std::vector<ItemSet>& fam, std::size_t p,
                           const char* tag) -> std::optional<std::string> {
    for (const ItemSet& s : fam) {
      ItemSet sub(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        sub.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) sub.push_back(s[i]);
        if (!l_index[p - 1].count(sub))
          return std::string(tag) + "[" + std::to_string(k + p) +
                 "] member {" + format_itemset(s) + "}: subset {" +
                 format_itemset(sub) + "} not in L[" +
                 std::to_string(k + p - 1) + "]";
      }
    }
    return std::nullopt;
  };
  for (std::size_t p = 1; p < families.L.size(); ++p)
    if (auto err = closure_check(families.L[p], p, "L")) return err;
  for (std::size_t p = 1; p < families.I.size(); ++p)
    if (auto err = closure_check(families.I[p], p, "I")) return err;

  for (std::size_t p = 0; p < families.I.size(); ++p) {
    if (p >= l_index.size()) break;
    for (const ItemSet& s : families.I[p]) {
      if (l_index[p].count(s))
        return "L[" + std::to_string(k + p) + "] and I[" +
               std::to_string(k + p) + "] share {" + format_itemset(s) + "}";
    }
  }
  return std::nullopt;
}

Count gkk_bound(std::span<const Count> sizes_L, std::span<const Count> sizes_I,
                unsigned k, unsigned p) {
  assert(p >= 1);
  const Count base = sizes_L.empty() ? Count(0) : sizes_L[0];
  SizeChain chain = build_chain(base, k, sizes_L.subspan(sizes_L.empty() ? 0 : 1),
                                sizes_I.subspan(sizes_I.empty() ? 0 : 1));
  return chain_value(chain, p);
}

Count g_mu(std::span<const Count> sizes_L, std::span<const Count> sizes_I,
           unsigned k) {
  const Count base = sizes_L.empty() ? Count(0) : sizes_L[0];
  SizeChain chain = build_chain(base, k, sizes_L.subspan(sizes_L.empty() ? 0 : 1),
                                sizes_I.subspan(sizes_I.empty() ? 0 : 1));
  return chain_mu(chain, base);
}

Count gkk_total(std::span<const Count> sizes_L, std::span<const Count> sizes_I,
                unsigned k) {
  const Count base = sizes_L.empty() ? Count(0) : sizes_L[0];
  SizeChain chain = build_chain(base, k, sizes_L.subspan(sizes_L.empty() ? 0 : 1),
                                sizes_I.subspan(sizes_I.empty() ? 0 : 1));
  return chain_total(chain);
}

Count GeneralizedBounds::gkk_at(unsigned target_level) const {
  if (target_level <= level) return 0;
  const std::size_t idx = target_level - level - 1;
  return idx < gkk.size() ? gkk[idx] : Count(0);
}

Count GeneralizedBounds::gkk_star_at(unsigned target_level) const {
  if (target_level <= level) return 0;
  const std::size_t idx = target_level - level - 1;
  return idx < gkk_star.size() ? gkk_star[idx] : Count(0);
}

GeneralizedBounds evaluate_generalized(const TrieNode* base_root,
                                       unsigned base_level,
                                       std::vector<ItemSet> upper_frequent,
                                       std::vector<ItemSet> infrequent) {
  assert(base_level >= 1);
  GeneralizedBounds out;
  out.level = base_level;

  SideSets sides;
  sides.upper_L = std::move(upper_frequent);
  sides.upper_I = std::move(infrequent);

  std::uint64_t base_n = 0;
  std::vector<Count> raw_L{Count(0)};
  std::vector<Count> raw_I;
  {
    std::size_t dummy = 0;
    auto upl = side_sizes(sides.upper_L, base_level, dummy);
    auto upi = side_sizes(sides.upper_I, base_level, dummy);
    raw_L.insert(raw_L.end(), upl.begin(), upl.end());
    raw_I.push_back(Count(0));
    raw_I.insert(raw_I.end(), upi.begin(), upi.end());
  }

  GsEval ev;
  if (base_root != nullptr) {
    filter_sides(sides, base_level, base_root);
    ev = eval_gstar(*base_root, 0, base_level, sides);
    base_n = ev.desc;
  }
  raw_L[0] = Count(base_n);

  SizeChain raw_chain = build_chain(raw_L[0], base_level,
                                    std::span<const Count>(raw_L).subspan(1),
                                    std::span<const Count>(raw_I).subspan(1));
  out.gkk = chain_materialize(raw_chain, raw_L[0]);
  out.g_mu = chain_mu(raw_chain, raw_L[0]);
  out.gkk_total = chain_total(raw_chain);

  out.gkk_star = std::move(ev.vals);
  for (const Count& v : out.gkk_star) out.gkk_star_total += v;
  if (base_n == 0) {
    out.g_mu_star = Count(base_level) - 1;
  } else {
    unsigned long last = 0;
    for (std::size_t p = out.gkk_star.size(); p >= 1; --p) {
      if (out.gkk_star[p - 1] > 0) {
        last = p;
        break;
      }
    }
    out.g_mu_star = Count(base_level) + last;
  }
  return out;
}

GeneralizedBounds evaluate_generalized(const LevelFamilies& families) {
  if (auto err = validate(families))
    throw std::invalid_argument("invalid level families: " + *err);
  PatternTrie trie;
  for (const ItemSet& s : families.level_L(0)) trie.insert(s);
  std::vector<ItemSet> upper = flatten(families.L, 1);
  std::vector<ItemSet> infreq = flatten(families.I, 0);
  return evaluate_generalized(&trie.root(), families.base_level,
                              std::move(upper), std::move(infreq));
}

Count gkk_star(const LevelFamilies& families, unsigned p) {
  return evaluate_generalized(families).gkk_star_at(families.base_level + p);
}

Count g_mu_star(const LevelFamilies& families) {
  return evaluate_generalized(families).g_mu_star;
}

Count gkk_star_total(const LevelFamilies& families) {
  return evaluate_generalized(families).gkk_star_total;
}

std::vector<ItemSet> gen_candidates_enum(const LevelFamilies& families,
                                         unsigned p) {
  assert(p >= 1);
  std::vector<ItemSet> out;
  const unsigned k = families.base_level;
  const std::vector<ItemSet>& base = families.level_L(0);
  if (base.empty()) return out;

  std::vector<Item> universe;
  for (const ItemSet& s : base)
    universe.insert(universe.end(), s.begin(), s.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()),
                 universe.end());
  if (universe.size() < k + p) return out;

  SetIndex base_index(base.begin(), base.end());
  std::vector<SetIndex> i_index(families.I.size());
  for (std::size_t j = 0; j < families.I.size(); ++j)
    i_index[j] = SetIndex(families.I[j].begin(), families.I[j].end());
  SetIndex own_L(families.level_L(p).begin(), families.level_L(p).end());

  // all (k+p)-subsets of the universe
  const unsigned r = k + p;
  std::vector<unsigned> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i;
  ItemSet cand(r);
  ItemSet sub;
  for (;;) {
    for (unsigned i = 0; i < r; ++i) cand[i] = universe[idx[i]];

    bool ok = !own_L.count(cand);
    if (ok && p < i_index.size() && i_index[p].count(cand)) ok = false;
    if (ok) {
      // every subset of size j, k <= j < k+p: base membership at j = k,
      // no known-infrequent hits above
      for (unsigned j = k; j < k + p && ok; ++j) {
        const bool check_i = j > k && (j - k) < i_index.size() &&
                             !i_index[j - k].empty();
        if (j > k && !check_i) continue;
        std::vector<unsigned> sidx(j);
        for (unsigned i = 0; i < j; ++i) sidx[i] = i;
        for (;;) {
          sub.clear();
          for (unsigned i = 0; i < j; ++i) sub.push_back(cand[sidx[i]]);
          if (j == k) {
            if (!base_index.count(sub)) {
              ok = false;
              break;
            }
          } else if (i_index[j - k].count(sub)) {
            ok = false;
            break;
          }
          int i = static_cast<int>(j) - 1;
          while (i >= 0 && sidx[i] == r - j + i) --i;
          if (i < 0) break;
          ++sidx[i];
          for (unsigned t = i + 1; t < j; ++t) sidx[t] = sidx[t - 1] + 1;
        }
      }
    }
    if (ok) out.push_back(cand);

    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == universe.size() - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<ItemSet> gen_candidates_recursion(const LevelFamilies& families,
                                              unsigned p) {
  assert(p >= 1);
  auto minus = [](std::vector<ItemSet> a, const std::vector<ItemSet>& l,
                  const std::vector<ItemSet>& i) {
    SetIndex drop(l.begin(), l.end());
    drop.insert(i.begin(), i.end());
    std::erase_if(a, [&](const ItemSet& s) { return drop.count(s) > 0; });
    return a;
  };

  std::vector<ItemSet> cur = minus(
      oracle::single_step_candidates(families.level_L(0)), families.level_L(1),
      families.level_I(1));
  for (unsigned j = 2; j <= p; ++j) {
    std::vector<ItemSet> pool = cur;
    const auto& lj = families.level_L(j - 1);
    pool.insert(pool.end(), lj.begin(), lj.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    cur = minus(oracle::single_step_candidates(pool), families.level_L(j),
                families.level_I(j));
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

}  // namespace kkminer
