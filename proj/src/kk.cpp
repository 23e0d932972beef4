#include <kkminer/kk.hpp>

#include <kkminer/binomial.hpp>

#include <stdexcept>

namespace kkminer {

Count kk_bound(const CanonicalRep& rep, unsigned p) {
  // Terms below the cutoff index s have m_i < i+p and contribute C(m,i+p)=0,
  // so summing over all terms is equivalent to the explicit cutoff form.
  Count sum = 0;
  for (const auto& t : rep.terms) sum += binomial(t.m, t.i + p);
  return sum;
}

Count kk_bound(const Count& n, unsigned k, unsigned p) {
  if (n == 0) return 0;
  return kk_bound(canonical_rep(n, k), p);
}

Count mu(const CanonicalRep& rep) {
  if (rep.terms.empty()) return Count(rep.k) - 1;
  return rep.terms.front().m;
}

Count mu(const Count& n, unsigned k) {
  if (n == 0) return Count(k) - 1;
  return mu(canonical_rep(n, k));
}

Count kk_total(const CanonicalRep& rep) {
  // kk_bound(rep, p) = sum_i C(m_i, i+p), and each term telescopes over p
  // into C(m_i, i+1) + ... + C(m_i, m_i). Summing per term avoids walking
  // p out to mu - k when mu is far from k.
  Count total = 0;
  for (const auto& t : rep.terms) {
    if (t.m <= t.i) continue;  // m == i contributes nothing beyond p = 0
    if (!t.m.fits_ulong_p())
      throw std::overflow_error("kk_total: value would have ~2^" +
                                t.m.get_str() + " digits");
    // sum_{j=i+1..m} C(m, j) = 2^m - sum_{j=0..i} C(m, j)
    Count full;
    mpz_ui_pow_ui(full.get_mpz_t(), 2, t.m.get_ui());
    for (unsigned j = 0; j <= t.i; ++j) full -= binomial(t.m, j);
    total += full;
  }
  return total;
}

Count kk_total(const Count& n, unsigned k) {
  if (n == 0) return 0;
  return kk_total(canonical_rep(n, k));
}

}  // namespace kkminer
