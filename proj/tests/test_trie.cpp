#include <doctest.h>

#include <kkminer/binomial.hpp>
#include <kkminer/kk.hpp>
#include <kkminer/oracle.hpp>
#include <kkminer/pattern_trie.hpp>

#include "paper_families.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace kkminer;

namespace {

PatternTrie build(const std::vector<ItemSet>& fam) {
  PatternTrie t;
  for (const ItemSet& s : fam) t.insert(s);
  return t;
}

// independent oracle: number of pairs the join step emits, before pruning
Count join_output_size(std::vector<ItemSet> fam) {
  std::map<ItemSet, unsigned long> groups;
  for (ItemSet s : fam) {
    s.pop_back();
    ++groups[s];
  }
  Count total = 0;
  for (const auto& [prefix, n] : groups) total += binomial(n, 2);
  return total;
}

std::vector<ItemSet> random_family(std::mt19937_64& rng, unsigned items,
                                   unsigned k, unsigned max_sets) {
  ItemSet universe;
  for (unsigned i = 1; i <= items; ++i) universe.push_back(i);
  auto pool = testfam::all_k_subsets(universe, k);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(1 + rng() % std::min<std::size_t>(pool.size(), max_sets));
  return pool;
}

}  // namespace

TEST_CASE("insertion and idempotence") {
  PatternTrie t;
  t.insert(ItemSet{1, 2, 3});
  CHECK(t.count_at_level(3) == 1);
  CHECK(t.node_count() == 3);
  t.insert(ItemSet{1, 2, 3});
  CHECK(t.node_count() == 3);
  CHECK(t.contains(ItemSet{1, 2, 3}));
  CHECK(t.contains(ItemSet{1, 2}));  // prefixes are paths too
  CHECK(t.contains(ItemSet{2, 3}) == false);
}

TEST_CASE("example family layout") {
  const auto t = build(testfam::family13());
  CHECK(t.count_at_level(3) == 13);
  // top-level children are the distinct minima: 1, 2 and 3
  CHECK(t.root().children.size() == 3);
  CHECK(t.max_depth() == 3);
}

TEST_CASE("projection views") {
  const auto t = build({{1, 2}, {1, 3}, {2, 3}});
  TrieView v1 = t.project(2, 1);
  REQUIRE(v1.node != nullptr);
  CHECK(v1.level == 1);
  REQUIRE(v1.node->children.size() == 2);
  CHECK(v1.node->children[0].item == 2);
  CHECK(v1.node->children[1].item == 3);

  TrieView v3 = t.project(2, 3);
  CHECK(v3.node == nullptr);  // 3 is never the minimum
  CHECK(evaluate_bounds(v3).family_size == 0);
}

TEST_CASE("projection of the 21-set family") {
  const auto t = build(testfam::family21());
  const BoundSet b = evaluate_bounds(t.project(3, 1));
  CHECK(b.kk_star_at(3) == 4);
}

TEST_CASE("candidate generation") {
  const auto t = build(testfam::family13());
  auto got = t.generate_candidates(3);
  std::sort(got.begin(), got.end());
  auto expect = testfam::family13_c4();
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);

  // join yields {1,2,3} but {2,3} is missing, so pruning kills it
  const auto t2 = build({{1, 2}, {1, 3}});
  CHECK(t2.generate_candidates(2).empty());

  PatternTrie empty;
  CHECK(empty.generate_candidates(4).empty());

  // level 1: all pairs of items survive
  const auto t3 = build({{4}, {7}, {9}});
  CHECK(t3.generate_candidates(1).size() == 3);
}

TEST_CASE("kk_star on the worked families") {
  const auto t21 = build(testfam::family21());
  CHECK(t21.kk_star(3, 1) == 10);
  CHECK(t21.kk_star(3, 2) == 2);
  CHECK(t21.kk_star(3, 3) == 0);

  const auto disjoint = build({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  for (unsigned p = 1; p <= 4; ++p) CHECK(disjoint.kk_star(3, p) == 0);

  // KK arm 0 while the join sum is 1: the min picks the KK arm
  const auto t2 = build({{1, 2}, {1, 3}});
  CHECK(kk_bound(2, 2, 1) == 0);
  CHECK(t2.obvious_bound(2) == 1);
  CHECK(t2.kk_star(2, 1) == 0);
}

TEST_CASE("mu_star") {
  CHECK(build(testfam::family21()).mu_star(3) == 5);
  CHECK(build({{1, 2, 3}, {4, 5, 6}}).mu_star(3) == 3);
  CHECK(build(testfam::family13()).mu_star(3) == 5);
  PatternTrie empty;
  CHECK(evaluate_bounds(&empty.root(), 3).mu_star == 2);
}

TEST_CASE("kk_star_total") {
  CHECK(build(testfam::family21()).kk_star_total(3) == 12);
  const auto full6 = build(testfam::all_k_subsets({1, 2, 3, 4, 5, 6}, 3));
  CHECK(full6.kk_star_total(3) == 22);
  PatternTrie empty;
  CHECK(evaluate_bounds(&empty.root(), 3).kk_star_total == 0);
}

TEST_CASE("obvious bound") {
  CHECK(build({{1, 2}, {1, 3}}).obvious_bound(2) == 1);
  CHECK(build({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).obvious_bound(3) == 0);

  // frozen from the join-enumeration oracle
  const auto fam = testfam::family13();
  CHECK(join_output_size(fam) == 12);
  CHECK(build(fam).obvious_bound(3) == join_output_size(fam));

  // never tighter than the improved single-step bound
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_family(rng, 9, 3, 40);
    const auto t = build(f);
    CHECK(t.obvious_bound(3) >= t.kk_star(3, 1));
  }
}

TEST_CASE("sandwich between brute force and the cardinality bound") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned k = 2 + rng() % 3;
    const auto fam = random_family(rng, 10, k, 60);
    const auto t = build(fam);
    const Count n(static_cast<unsigned long>(fam.size()));
    for (unsigned p = 1; p <= 4; ++p) {
      const Count brute(static_cast<unsigned long>(
          oracle::brute_force_candidates(fam, p).size()));
      const Count star = t.kk_star(k, p);
      CHECK(brute <= star);
      CHECK(star <= kk_bound(n, k, p));
    }
  }
}

TEST_CASE("candidates split along minimum-item projections") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned k = 2 + rng() % 2;
    const auto fam = random_family(rng, 8, k, 40);
    const auto t = build(fam);
    for (unsigned p = 1; p <= 3; ++p) {
      for (const ItemSet& cand : oracle::brute_force_candidates(fam, p)) {
        const Item x = cand.front();
        TrieView view = t.project(k, x);
        std::vector<ItemSet> proj;
        if (view.node != nullptr) {
          // collect the projected family
          std::function<void(const TrieNode&, unsigned, ItemSet&)> walk =
              [&](const TrieNode& nd, unsigned depth, ItemSet& path) {
                if (depth == view.level) {
                  proj.push_back(path);
                  return;
                }
                for (const TrieNode& c : nd.children) {
                  path.push_back(c.item);
                  walk(c, depth + 1, path);
                  path.pop_back();
                }
              };
          ItemSet path;
          walk(*view.node, 0, path);
        }
        const ItemSet rest(cand.begin() + 1, cand.end());
        if (p == 1) {
          // size-k rest must be a member of the projection's shade base
          CHECK(!proj.empty());
        }
        const auto sub = oracle::brute_force_candidates(proj, p);
        CHECK(std::find(sub.begin(), sub.end(), rest) != sub.end());
      }
    }
  }
}

TEST_CASE("generation matches brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const unsigned k = 1 + rng() % 3;
    const auto fam = random_family(rng, 9, k, 50);
    auto got = build(fam).generate_candidates(k);
    auto expect = oracle::brute_force_candidates(fam, 1);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
  }
}

TEST_CASE("relabeling can move kk_star but never under the truth") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned k = 2 + rng() % 2;
    auto fam = random_family(rng, 8, k, 40);
    std::vector<Item> perm{1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ItemSet> relabeled;
    for (const ItemSet& s : fam) {
      ItemSet r;
      for (Item v : s) r.push_back(perm[v - 1]);
      std::sort(r.begin(), r.end());
      relabeled.push_back(std::move(r));
    }
    const auto t = build(relabeled);
    for (unsigned p = 1; p <= 3; ++p) {
      const auto brute = oracle::brute_force_candidates(relabeled, p);
      CHECK(Count(static_cast<unsigned long>(brute.size())) <=
            t.kk_star(k, p));
    }
  }
}

TEST_CASE("bound cache survives reads and drops on mutation") {
  auto t = build(testfam::family21());
  CHECK(t.bounds(3).family_size == 21);
  CHECK(t.kk_star(3, 1) == 10);  // cached path
  t.insert(ItemSet{11, 12, 13});
  CHECK(t.bounds(3).family_size == 22);  // recomputed after the mutation
  CHECK(t.kk_star(3, 1) == 10);
}
