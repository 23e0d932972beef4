#include <doctest.h>

#include <kkminer/binomial.hpp>
#include <kkminer/canonical.hpp>

#include <random>

using namespace kkminer;

namespace {

void check_wellformed(const CanonicalRep& rep, const Count& n) {
  CHECK(rep.reconstruct() == n);
  unsigned prev_i = rep.k + 1;
  Count prev_m = -1;
  Count rem = n;
  for (const auto& t : rep.terms) {
    CHECK(t.i == prev_i - 1);  // indices run k, k-1, ... without gaps
    if (prev_m >= 0) CHECK(t.m < prev_m);
    CHECK(t.m >= t.i);
    // greedy maximality: C(m+1, i) must overshoot the remainder
    CHECK(binomial(t.m + 1, t.i) > rem);
    rem -= binomial(t.m, t.i);
    prev_i = t.i;
    prev_m = t.m;
  }
  CHECK(rem == 0);
}

}  // namespace

TEST_CASE("worked decompositions") {
  auto rep = canonical_rep(13, 3);
  REQUIRE(rep.terms.size() == 2);
  CHECK(rep.terms[0].m == 5);
  CHECK(rep.terms[0].i == 3);
  CHECK(rep.terms[1].m == 3);
  CHECK(rep.terms[1].i == 2);

  rep = canonical_rep(21, 3);
  REQUIRE(rep.terms.size() == 2);
  CHECK(rep.terms[0].m == 6);
  CHECK(rep.terms[0].i == 3);
  CHECK(rep.terms[1].m == 2);
  CHECK(rep.terms[1].i == 2);

  rep = canonical_rep(1, 4);
  REQUIRE(rep.terms.size() == 1);
  CHECK(rep.terms[0].m == 4);
  CHECK(rep.terms[0].i == 4);

  CHECK(canonical_rep(0, 3).terms.empty());
}

TEST_CASE("reconstruction and uniqueness across a dense sweep") {
  for (unsigned k = 1; k <= 10; ++k)
    for (unsigned long n = 0; n <= 3000; ++n)
      check_wellformed(canonical_rep(n, k), Count(n));
}

TEST_CASE("sampled large inputs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<unsigned long> dist(3001, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % 10);
    const unsigned long n = dist(rng);
    check_wellformed(canonical_rep(n, k), Count(n));
  }
}

TEST_CASE("astronomical n") {
  Count n = Count("1" + std::string(60, '0'));  // 10^60
  for (unsigned k : {2u, 3u, 7u}) {
    const auto rep = canonical_rep(n, k);
    CHECK(rep.reconstruct() == n);
    CHECK(rep.terms.front().m >= rep.terms.front().i);
  }
}
