#include <doctest.h>

#include <kkminer/kk.hpp>

#include <random>

using namespace kkminer;

TEST_CASE("worked bound values") {
  CHECK(kk_bound(13, 3, 1) == 6);
  CHECK(kk_bound(13, 3, 2) == 1);
  CHECK(kk_bound(13, 3, 3) == 0);

  CHECK(kk_bound(21, 3, 1) == 15);
  CHECK(kk_bound(21, 3, 2) == 6);
  CHECK(kk_bound(21, 3, 3) == 1);

  CHECK(kk_bound(2, 2, 1) == 0);

  CHECK(kk_bound(20, 3, 1) == 15);
  CHECK(kk_bound(20, 3, 2) == 6);
  CHECK(kk_bound(20, 3, 3) == 1);

  CHECK(kk_bound(0, 5, 1) == 0);
}

TEST_CASE("mu") {
  CHECK(mu(13, 3) == 5);
  CHECK(mu(20, 3) == 6);
  CHECK(mu(1, 4) == 4);
  CHECK(mu(0, 3) == 2);  // empty family admits nothing
  CHECK(mu(0, 1) == 0);
}

TEST_CASE("totals") {
  CHECK(kk_total(20, 3) == 22);
  CHECK(kk_total(13, 3) == 7);
  CHECK(kk_total(0, 3) == 0);
  // level 1: total candidates above n singletons is 2^n - n - 1
  CHECK(kk_total(10, 1) == 1024 - 10 - 1);
}

TEST_CASE("total equals the per-level sum") {
  for (unsigned k = 1; k <= 6; ++k) {
    for (unsigned long n = 0; n <= 400; ++n) {
      const Count m = mu(n, k);
      Count sum = 0;
      for (Count p = 1; Count(k) + p <= m; ++p)
        sum += kk_bound(n, k, p.get_ui());
      CHECK(kk_total(n, k) == sum);
    }
  }
}

TEST_CASE("monotone in n") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 4000; ++i) {
    const unsigned k = 1 + static_cast<unsigned>(rng() % 6);
    const unsigned long n1 = rng() % 5000;
    const unsigned long n2 = n1 + rng() % 5000;
    const unsigned p = 1 + static_cast<unsigned>(rng() % 5);
    CHECK(kk_bound(n1, k, p) <= kk_bound(n2, k, p));
  }
}

TEST_CASE("single steps compose") {
  // KK_k^{k+p} = KK_{k+p-1}^{k+p} applied to KK_k^{k+p-1}
  for (unsigned k = 1; k <= 5; ++k) {
    for (unsigned long n = 0; n <= 500; ++n) {
      for (unsigned p = 2; p <= 5; ++p) {
        const Count inner = kk_bound(n, k, p - 1);
        CHECK(kk_bound(n, k, p) == kk_bound(inner, k + p - 1, 1));
      }
    }
  }
}

TEST_CASE("mu marks the first vanishing level") {
  for (unsigned k = 1; k <= 6; ++k) {
    for (unsigned long n = 1; n <= 300; ++n) {
      unsigned p = 1;
      while (kk_bound(n, k, p) > 0) ++p;
      CHECK(mu(n, k) == Count(k) + p - 1);
    }
  }
}
