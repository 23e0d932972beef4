#include <kkminer/pattern_trie.hpp>

#include <kkminer/binomial.hpp>

#include <algorithm>
#include <cassert>

namespace kkminer {

namespace {

const TrieNode* find_child(const std::vector<TrieNode>& children, Item x) {
  auto it = std::lower_bound(
      children.begin(), children.end(), x,
      [](const TrieNode& n, Item v) { return n.item < v; });
  if (it == children.end() || it->item != x) return nullptr;
  return &*it;
}

struct NodeEval {
  std::uint64_t desc = 0;      // descendants at the target depth
  std::vector<Count> kk_star;  // [p-1] -> bound for this subfamily
};

Count child_value(const NodeEval& c, unsigned p) {
  return p - 1 < c.kk_star.size() ? c.kk_star[p - 1] : Count(0);
}

// Post-order evaluation. A node at depth d holds a family of (k-d)-sets:
// its depth-k descendants with the path prefix stripped. Once a bound
// value reaches zero it stays zero at all later levels, so vectors stop at
// the first zero.
NodeEval eval_node(const TrieNode& node, unsigned depth, unsigned k) {
  NodeEval ev;
  if (depth == k) {
    ev.desc = 1;
    return ev;
  }
  std::vector<NodeEval> kids;
  kids.reserve(node.children.size());
  for (const TrieNode& c : node.children) {
    NodeEval ce = eval_node(c, depth + 1, k);
    ev.desc += ce.desc;
    kids.push_back(std::move(ce));
  }
  if (ev.desc == 0) return ev;

  const unsigned kp = k - depth;  // family level at this node
  if (kp == 1) {
    // KK* for singleton families is the plain bound C(n, p+1)
    ev.kk_star.reserve(ev.desc > 0 ? ev.desc - 1 : 0);
    for (std::uint64_t p = 1; p < ev.desc; ++p)
      ev.kk_star.push_back(binomial(ev.desc, p + 1));
    return ev;
  }

  const CanonicalRep rep = canonical_rep(Count(ev.desc), kp);
  const Count mu_val = mu(rep);
  assert(mu_val.fits_ulong_p());
  const unsigned long plimit = mu_val.get_ui() - kp;
  for (unsigned long p = 1; p <= plimit; ++p) {
    Count cap = kk_bound(rep, static_cast<unsigned>(p));
    Count sum = 0;
    bool capped = false;
    for (const NodeEval& ce : kids) {
      sum += child_value(ce, static_cast<unsigned>(p));
      if (sum >= cap) {  // min is the KK arm; the sum's exact value no
        capped = true;   // longer matters
        break;
      }
    }
    Count v = capped ? std::move(cap) : std::move(sum);
    if (v == 0) break;
    ev.kk_star.push_back(std::move(v));
  }
  return ev;
}

}  // namespace

const TrieNode* TrieNode::find(Item x) const {
  return find_child(children, x);
}

TrieNode* TrieNode::find(Item x) {
  return const_cast<TrieNode*>(find_child(children, x));
}

TrieNode& TrieNode::get_or_add(Item x) {
  auto it = std::lower_bound(
      children.begin(), children.end(), x,
      [](const TrieNode& n, Item v) { return n.item < v; });
  if (it != children.end() && it->item == x) return *it;
  TrieNode fresh;
  fresh.item = x;
  return *children.insert(it, std::move(fresh));
}

Count BoundSet::kk_at(unsigned target_level) const {
  if (target_level <= level) return 0;
  const std::size_t idx = target_level - level - 1;
  return idx < kk.size() ? kk[idx] : Count(0);
}

Count BoundSet::kk_star_at(unsigned target_level) const {
  if (target_level <= level) return 0;
  const std::size_t idx = target_level - level - 1;
  return idx < kk_star.size() ? kk_star[idx] : Count(0);
}

BoundSet evaluate_bounds(const TrieNode* root, unsigned level) {
  assert(level >= 1);
  BoundSet out;
  out.level = level;
  if (root == nullptr) {
    out.mu = Count(level) - 1;
    out.mu_star = out.mu;
    return out;
  }
  NodeEval ev = eval_node(*root, 0, level);
  out.family_size = Count(ev.desc);
  if (ev.desc == 0) {
    out.mu = Count(level) - 1;
    out.mu_star = out.mu;
    return out;
  }
  const CanonicalRep rep = canonical_rep(out.family_size, level);
  out.mu = mu(rep);
  out.kk_total = kk_total(rep);
  Count target = out.mu - level;
  if (target.fits_ulong_p()) {
    const unsigned long plimit = target.get_ui();
    out.kk.reserve(plimit);
    for (unsigned long p = 1; p <= plimit; ++p)
      out.kk.push_back(kk_bound(rep, static_cast<unsigned>(p)));
  }
  out.kk_star = std::move(ev.kk_star);
  out.mu_star = Count(level) + out.kk_star.size();
  for (const Count& v : out.kk_star) out.kk_star_total += v;
  return out;
}

BoundSet evaluate_bounds(const TrieView& view) {
  return evaluate_bounds(view.node, view.level);
}

TrieView project(const TrieView& view, Item x) {
  if (view.node == nullptr || view.level == 0) return {nullptr, 0};
  return {view.node->find(x), view.level - 1};
}

void PatternTrie::insert(std::span<const Item> s) {
  assert(is_sorted_unique(s));
  TrieNode* node = &root_;
  for (Item x : s) node = &node->get_or_add(x);
  invalidate();
}

bool PatternTrie::contains(std::span<const Item> s) const {
  return find(s) != nullptr;
}

const TrieNode* PatternTrie::find(std::span<const Item> s) const {
  const TrieNode* node = &root_;
  for (Item x : s) {
    node = node->find(x);
    if (node == nullptr) return nullptr;
  }
  return node;
}

std::uint64_t PatternTrie::count_at_level(unsigned level) const {
  std::uint64_t n = 0;
  std::function<void(const TrieNode&, unsigned)> walk =
      [&](const TrieNode& nd, unsigned depth) {
        if (depth == level) {
          ++n;
          return;
        }
        for (const TrieNode& c : nd.children) walk(c, depth + 1);
      };
  walk(root_, 0);
  return n;
}

std::size_t PatternTrie::node_count() const {
  std::size_t n = 0;
  std::function<void(const TrieNode&)> walk = [&](const TrieNode& nd) {
    n += nd.children.size();
    for (const TrieNode& c : nd.children) walk(c);
  };
  walk(root_);
  return n;
}

unsigned PatternTrie::max_depth() const {
  std::function<unsigned(const TrieNode&)> walk =
      [&](const TrieNode& nd) -> unsigned {
    unsigned d = 0;
    for (const TrieNode& c : nd.children) d = std::max(d, 1 + walk(c));
    return d;
  };
  return walk(root_);
}

TrieNode& PatternTrie::mutable_root() {
  invalidate();
  return root_;
}

TrieView PatternTrie::project(unsigned level, Item x) const {
  return kkminer::project(view(level), x);
}

const BoundSet& PatternTrie::bounds(unsigned level) const {
  auto it = bound_cache_.find(level);
  if (it == bound_cache_.end())
    it = bound_cache_.emplace(level, evaluate_bounds(&root_, level)).first;
  return it->second;
}

Count PatternTrie::kk_star(unsigned level, unsigned p) const {
  return bounds(level).kk_star_at(level + p);
}

Count PatternTrie::mu_star(unsigned level) const {
  return bounds(level).mu_star;
}

Count PatternTrie::kk_star_total(unsigned level) const {
  return bounds(level).kk_star_total;
}

namespace {

// Join every pair of siblings at depth `level`, prune unions with a
// missing level-subset, and hand the survivors to fn. The two subsets
// obtained by dropping one of the joined pair are siblings by
// construction, so only the level-1 prefix positions need lookups.
template <typename Fn>
void for_each_candidate(const TrieNode& root, const PatternTrie& trie,
                        unsigned level, Fn&& fn) {
  ItemSet path;
  ItemSet probe;
  std::function<void(const TrieNode&, unsigned)> walk = [&](const TrieNode& nd,
                                                            unsigned depth) {
    if (depth == level - 1) {
      const auto& kids = nd.children;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        for (std::size_t j = i + 1; j < kids.size(); ++j) {
          path.push_back(kids[i].item);
          path.push_back(kids[j].item);
          bool keep = true;
          for (std::size_t drop = 0; drop + 2 < path.size() && keep; ++drop) {
            probe.clear();
            for (std::size_t t = 0; t < path.size(); ++t)
              if (t != drop) probe.push_back(path[t]);
            keep = trie.contains(probe);
          }
          if (keep) fn(path, nd, kids[i], kids[j]);
          path.pop_back();
          path.pop_back();
        }
      }
      return;
    }
    for (const TrieNode& c : nd.children) {
      path.push_back(c.item);
      walk(c, depth + 1);
      path.pop_back();
    }
  };
  walk(root, 0);
}

}  // namespace

std::vector<ItemSet> PatternTrie::generate_candidates(unsigned level) const {
  std::vector<ItemSet> out;
  for_each_candidate(root_, *this, level,
                     [&](const ItemSet& cand, const TrieNode&, const TrieNode&,
                         const TrieNode&) { out.push_back(cand); });
  return out;
}

std::uint64_t PatternTrie::extend_level(unsigned level) {
  std::uint64_t added = 0;
  for_each_candidate(root_, *this, level,
                     [&](const ItemSet&, const TrieNode&, const TrieNode& a,
                         const TrieNode& b) {
                       // new leaf goes under the left join parent
                       auto& left = const_cast<TrieNode&>(a);
                       left.children.push_back(TrieNode{.item = b.item});
                       ++added;
                     });
  if (added) invalidate();
  return added;
}

Count PatternTrie::obvious_bound(unsigned level) const {
  Count total = 0;
  std::function<void(const TrieNode&, unsigned)> walk =
      [&](const TrieNode& nd, unsigned depth) {
        if (depth == level - 1) {
          total += binomial(nd.children.size(), 2);
          return;
        }
        for (const TrieNode& c : nd.children) walk(c, depth + 1);
      };
  walk(root_, 0);
  return total;
}

std::vector<ItemSet> PatternTrie::prune_level(unsigned level,
                                              std::uint64_t minsup) {
  std::vector<ItemSet> removed;
  ItemSet path;
  std::function<void(TrieNode&, unsigned)> walk = [&](TrieNode& nd,
                                                      unsigned depth) {
    if (depth == level - 1) {
      auto dead = std::stable_partition(
          nd.children.begin(), nd.children.end(),
          [&](const TrieNode& c) { return c.support >= minsup; });
      for (auto it = dead; it != nd.children.end(); ++it) {
        path.push_back(it->item);
        removed.push_back(path);
        path.pop_back();
      }
      nd.children.erase(dead, nd.children.end());
      return;
    }
    for (TrieNode& c : nd.children) {
      path.push_back(c.item);
      walk(c, depth + 1);
      path.pop_back();
    }
  };
  walk(root_, 0);
  if (!removed.empty()) invalidate();
  return removed;
}

void PatternTrie::erase_below(unsigned level) {
  std::function<void(TrieNode&, unsigned)> walk = [&](TrieNode& nd,
                                                      unsigned depth) {
    if (depth == level) {
      nd.children.clear();
      return;
    }
    for (TrieNode& c : nd.children) walk(c, depth + 1);
  };
  walk(root_, 0);
  invalidate();
}

std::vector<ItemSet> PatternTrie::collect(unsigned level) const {
  std::vector<ItemSet> out;
  for_each_at_level(level,
                    [&](const ItemSet& s, const TrieNode&) { out.push_back(s); });
  return out;
}

void PatternTrie::for_each_at_level(
    unsigned level,
    const std::function<void(const ItemSet&, const TrieNode&)>& fn) const {
  ItemSet path;
  std::function<void(const TrieNode&, unsigned)> walk =
      [&](const TrieNode& nd, unsigned depth) {
        if (depth == level) {
          fn(path, nd);
          return;
        }
        for (const TrieNode& c : nd.children) {
          path.push_back(c.item);
          walk(c, depth + 1);
          path.pop_back();
        }
      };
  walk(root_, 0);
}

void PatternTrie::invalidate() { bound_cache_.clear(); }

}  // namespace kkminer
