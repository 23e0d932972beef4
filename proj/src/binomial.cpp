#include <kkminer/binomial.hpp>

#include <unordered_map>

namespace kkminer {

namespace {

// Memo for the small arguments that dominate trie traversals. Keyed by
// (n,k) packed into one word; per-thread so no locking is needed and
// correctness never depends on it.
constexpr unsigned long kCacheMaxN = 1u << 20;
constexpr unsigned long kCacheMaxK = 64;

Count binomial_uncached(unsigned long n, unsigned long k) {
  Count r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Count binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k == 0 || k == n) return 1;
  if (n >= kCacheMaxN || k >= kCacheMaxK) return binomial_uncached(n, k);

  thread_local std::unordered_map<std::uint64_t, Count> cache;
  const std::uint64_t key = (static_cast<std::uint64_t>(n) << 6) | k;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Count r = binomial_uncached(n, k);
  cache.emplace(key, r);
  return r;
}

Count binomial(const Count& n, unsigned long k) {
  if (n < 0) return 0;
  if (n.fits_ulong_p()) return binomial(n.get_ui(), k);
  Count r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

}  // namespace kkminer
