#include <doctest.h>

#include <kkminer/binomial.hpp>

#include <vector>

using kkminer::Count;
using kkminer::binomial;

TEST_CASE("small values") {
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, 7) == 1);
  CHECK(binomial(20, 3) == 1140);
}

TEST_CASE("merged-dataset pattern counts") {
  // 20-item block plus 1000 disjoint 5-item blocks
  CHECK(binomial(20, 3) + 1000 * binomial(5, 3) == 11140);
  CHECK(binomial(20, 4) + 1000 * binomial(5, 4) == 9845);
}

TEST_CASE("agrees with the Pascal-triangle recurrence") {
  const unsigned N = 80;
  std::vector<std::vector<Count>> pascal(N + 1);
  for (unsigned n = 0; n <= N; ++n) {
    pascal[n].resize(n + 1);
    pascal[n][0] = 1;
    pascal[n][n] = 1;
    for (unsigned k = 1; k < n; ++k)
      pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (unsigned n = 0; n <= N; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
}

TEST_CASE("large arguments stay exact") {
  CHECK(binomial(1000, 500).get_str().size() == 300);
  // C(n,2) = n(n-1)/2 for n = 10^30
  Count n("1000000000000000000000000000000");
  CHECK(binomial(n, 2) == n * (n - 1) / 2);
  CHECK(binomial(n, 3) == n * (n - 1) * (n - 2) / 6);
  CHECK(binomial(Count(4), 10) == 0);
}
