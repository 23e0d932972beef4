#include <doctest.h>

#include <kkminer/oracle.hpp>

#include "paper_families.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace kkminer;
using namespace kkminer::oracle;

TEST_CASE("colex order generation") {
  // the 13-set family is exactly the first 13 three-sets in colex order
  CHECK(colex_family(13, 3) == testfam::family13());

  CHECK(colex_family(1, 4) == std::vector<ItemSet>{{1, 2, 3, 4}});

  const std::vector<ItemSet> expect{{1, 2}, {1, 3}, {2, 3},
                                    {1, 4}, {2, 4}, {3, 4}};
  CHECK(colex_family(6, 2) == expect);

  CHECK(colex_family(0, 3).empty());
}

TEST_CASE("colex families are duplicate-free and ordered") {
  const auto fam = colex_family(120, 4);
  std::set<ItemSet> dedupe(fam.begin(), fam.end());
  CHECK(dedupe.size() == fam.size());
  for (std::size_t i = 1; i < fam.size(); ++i)
    CHECK(colex_less(fam[i - 1], fam[i]));
}

TEST_CASE("brute-force candidates on the worked families") {
  auto c4 = brute_force_candidates(testfam::family13(), 1);
  std::sort(c4.begin(), c4.end());
  auto expect4 = testfam::family13_c4();
  std::sort(expect4.begin(), expect4.end());
  CHECK(c4 == expect4);

  const auto c5 = brute_force_candidates(testfam::family13(), 2);
  CHECK(c5 == std::vector<ItemSet>{{1, 2, 3, 4, 5}});

  CHECK(brute_force_candidates(testfam::family21(), 1).size() == 10);
  CHECK(brute_force_candidates(testfam::family21(), 2).size() == 2);

  const std::vector<ItemSet> disjoint{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (unsigned p = 1; p <= 3; ++p)
    CHECK(brute_force_candidates(disjoint, p).empty());
}

TEST_CASE("maxsize") {
  CHECK(maxsize(testfam::family13()) == 5);
  CHECK(maxsize(testfam::family21()) == 5);
  CHECK(maxsize({{1, 2, 3}, {4, 5, 6}}) == 3);
  CHECK(maxsize({{2, 4}}) == 2);
}

TEST_CASE("maxsize agrees with the direct definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const unsigned k = 2 + rng() % 3;
    auto fam = testfam::all_k_subsets({1, 2, 3, 4, 5, 6, 7, 8}, k);
    std::shuffle(fam.begin(), fam.end(), rng);
    fam.resize(1 + rng() % fam.size());

    unsigned direct = k;
    for (unsigned p = 1; p <= 8 - k; ++p)
      if (!brute_force_candidates(fam, p).empty()) direct = k + p;
    CHECK(maxsize(fam) == direct);
  }
}

TEST_CASE("adding patterns never removes candidates") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned k = 2 + rng() % 2;
    auto pool = testfam::all_k_subsets({1, 2, 3, 4, 5, 6, 7}, k);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t cut = 1 + rng() % (pool.size() - 1);
    std::vector<ItemSet> small(pool.begin(), pool.begin() + cut);
    std::vector<ItemSet> large(pool.begin(), pool.begin() + cut + 1);
    for (unsigned p = 1; p <= 3; ++p) {
      auto a = brute_force_candidates(small, p);
      auto b = brute_force_candidates(large, p);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST_CASE("single-step candidates match the definition") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned k = 2 + rng() % 3;
    auto fam = testfam::all_k_subsets({1, 2, 3, 4, 5, 6, 7, 8, 9}, k);
    std::shuffle(fam.begin(), fam.end(), rng);
    fam.resize(1 + rng() % std::min<std::size_t>(fam.size(), 40));
    auto by_join = single_step_candidates(fam);
    auto by_enum = brute_force_candidates(fam, 1);
    std::sort(by_join.begin(), by_join.end());
    std::sort(by_enum.begin(), by_enum.end());
    CHECK(by_join == by_enum);
  }
}
