#include <kkminer/verify.hpp>

#include <kkminer/kk.hpp>
#include <kkminer/oracle.hpp>
#include <kkminer/pattern_trie.hpp>

#include <algorithm>

namespace kkminer {

namespace {

constexpr std::size_t kMaxMessages = 16;

Count clamp0(Count v) { return v < 0 ? Count(0) : v; }

}  // namespace

void VerifyStats::note_failure(const std::string& msg) {
  ++failures;
  if (messages.size() < kMaxMessages) messages.push_back(msg);
}

void VerifyStats::merge(const VerifyStats& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& m : other.messages)
    if (messages.size() < kMaxMessages) messages.push_back(m);
}

VerifyStats verify_tightness(unsigned max_n, unsigned max_k, unsigned max_p) {
  VerifyStats total;
  const int nmax = static_cast<int>(max_n);
#pragma omp parallel
  {
    VerifyStats local;
#pragma omp for schedule(dynamic, 4) nowait
    for (int n = 1; n <= nmax; ++n) {
      for (unsigned k = 2; k <= max_k; ++k) {
        const auto family = oracle::colex_family(n, k);
        for (unsigned p = 1; p <= max_p; ++p) {
          const Count expect = kk_bound(Count(n), k, p);
          const auto got = oracle::brute_force_candidates(family, p);
          ++local.checks;
          if (Count(static_cast<unsigned long>(got.size())) != expect) {
            local.note_failure("tightness n=" + std::to_string(n) +
                               " k=" + std::to_string(k) +
                               " p=" + std::to_string(p) + ": brute " +
                               std::to_string(got.size()) + " != kk " +
                               expect.get_str());
          }
        }
        const unsigned ms = oracle::maxsize(family);
        ++local.checks;
        if (Count(ms) != mu(Count(n), k)) {
          local.note_failure("maxsize n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + ": " +
                             std::to_string(ms) + " != mu " +
                             mu(Count(n), k).get_str());
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

VerifyStats verify_sandwich(std::uint64_t trials, std::uint64_t seed,
                            const FamilyGenConfig& cfg, unsigned max_p) {
  VerifyStats total;
  const std::int64_t n_trials = static_cast<std::int64_t>(trials);
#pragma omp parallel
  {
    VerifyStats local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t t = 0; t < n_trials; ++t) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t));
      std::uniform_int_distribution<unsigned> k_dist(cfg.min_k, cfg.max_k);
      const unsigned k = k_dist(rng);

      LevelFamilies fam = random_level_families(rng, cfg, k);
      const auto& base = fam.L[0];
      PatternTrie trie;
      for (const ItemSet& s : base) trie.insert(s);
      const BoundSet bs = evaluate_bounds(&trie.root(), k);
      const GeneralizedBounds gb = evaluate_generalized(fam);

      if (auto err = validate(fam)) {
        local.note_failure("generator produced invalid families: " + *err);
        continue;
      }

      const Count nbase(static_cast<unsigned long>(base.size()));
      for (unsigned p = 1; p <= max_p; ++p) {
        const unsigned target = k + p;
        const Count brute(static_cast<unsigned long>(
            oracle::brute_force_candidates(base, p).size()));
        const Count star = bs.kk_star_at(target);
        const Count plain = kk_bound(nbase, k, p);
        ++local.checks;
        if (!(brute <= star && star <= plain)) {
          local.note_failure("sandwich t=" + std::to_string(t) + " k=" +
                             std::to_string(k) + " p=" + std::to_string(p) +
                             ": " + brute.get_str() + " <= " + star.get_str() +
                             " <= " + plain.get_str() + " violated");
        }

        // generalized chains on the random valid extension
        const Count lp(static_cast<unsigned long>(fam.level_L(p).size()));
        const Count ip(static_cast<unsigned long>(fam.level_I(p).size()));
        const Count gbrute(static_cast<unsigned long>(
            gen_candidates_enum(fam, p).size()));
        const Count gstar = gb.gkk_star_at(target);
        ++local.checks;
        if (!(gbrute <= gstar && gstar <= clamp0(star - lp - ip))) {
          local.note_failure("theorem-4 chain t=" + std::to_string(t) + " k=" +
                             std::to_string(k) + " p=" + std::to_string(p) +
                             ": " + gbrute.get_str() + " <= " +
                             gstar.get_str() + " <= clamp(" + star.get_str() +
                             " - " + lp.get_str() + " - " + ip.get_str() +
                             ") violated");
        }

        std::vector<Count> sizes_l, sizes_i;
        for (std::size_t j = 0; j < fam.L.size(); ++j)
          sizes_l.push_back(
              Count(static_cast<unsigned long>(fam.L[j].size())));
        for (std::size_t j = 0; j < fam.I.size(); ++j)
          sizes_i.push_back(
              Count(static_cast<unsigned long>(fam.I[j].size())));
        const Count gplain = gkk_bound(sizes_l, sizes_i, k, p);
        ++local.checks;
        if (!(gbrute <= gplain && gplain <= clamp0(plain - lp - ip))) {
          local.note_failure("theorem-3 chain t=" + std::to_string(t) + " k=" +
                             std::to_string(k) + " p=" + std::to_string(p) +
                             ": " + gbrute.get_str() + " <= " +
                             gplain.get_str() + " <= clamp(" +
                             plain.get_str() + " - " + lp.get_str() + " - " +
                             ip.get_str() + ") violated");
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

VerifyStats verify_recursion_equivalence(std::uint64_t trials,
                                         std::uint64_t seed,
                                         const FamilyGenConfig& cfg,
                                         unsigned max_p) {
  VerifyStats total;
  const std::int64_t n_trials = static_cast<std::int64_t>(trials);
#pragma omp parallel
  {
    VerifyStats local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t t = 0; t < n_trials; ++t) {
      std::mt19937_64 rng(seed * 31 + 7 + static_cast<std::uint64_t>(t));
      std::uniform_int_distribution<unsigned> k_dist(cfg.min_k, cfg.max_k);
      const unsigned k = k_dist(rng);
      LevelFamilies fam = random_level_families(rng, cfg, k);
      for (unsigned p = 1; p <= max_p; ++p) {
        auto by_enum = gen_candidates_enum(fam, p);
        auto by_rec = gen_candidates_recursion(fam, p);
        std::sort(by_enum.begin(), by_enum.end());
        ++local.checks;
        if (by_enum != by_rec) {
          local.note_failure("recursion mismatch t=" + std::to_string(t) +
                             " k=" + std::to_string(k) +
                             " p=" + std::to_string(p) + ": enum " +
                             std::to_string(by_enum.size()) + " sets vs " +
                             std::to_string(by_rec.size()));
        }
      }
    }
#pragma omp critical
    total.merge(local);
  }
  return total;
}

}  // namespace kkminer
