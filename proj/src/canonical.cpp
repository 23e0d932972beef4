#include <kkminer/canonical.hpp>

#include <kkminer/binomial.hpp>

#include <cassert>

namespace kkminer {

namespace {

// Largest m with C(m, i) <= rem, given rem >= 1.
Count max_upper_index(const Count& rem, unsigned i) {
  if (i == 1) return rem;
  Count lo = i;  // C(i,i) = 1 <= rem
  Count hi = Count(i) + 1;
  while (binomial(hi, i) <= rem) {
    lo = hi;
    hi *= 2;
  }
  // invariant: C(lo,i) <= rem < C(hi,i)
  while (hi - lo > 1) {
    Count mid = (lo + hi) / 2;
    if (binomial(mid, i) <= rem)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

Count CanonicalRep::reconstruct() const {
  Count sum = 0;
  for (const auto& t : terms) sum += binomial(t.m, t.i);
  return sum;
}

CanonicalRep canonical_rep(const Count& n, unsigned k) {
  assert(k >= 1);
  assert(n >= 0);
  CanonicalRep rep;
  rep.k = k;
  Count rem = n;
  for (unsigned i = k; i >= 1 && rem > 0; --i) {
    Count m = max_upper_index(rem, i);
    rem -= binomial(m, i);
    assert(rep.terms.empty() || rep.terms.back().m > m);
    rep.terms.push_back({std::move(m), i});
  }
  assert(rem == 0);
  return rep;
}

}  // namespace kkminer
