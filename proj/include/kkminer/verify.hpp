#pragma once

#include <kkminer/family_gen.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kkminer {

struct VerifyStats {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions

  void note_failure(const std::string& msg);
  void merge(const VerifyStats& other);
  bool ok() const { return failures == 0; }
};

/// Extremal-family sweep: for every n <= max_n and k in [2, max_k], the
/// brute-force candidate count of the colex family of size n equals the
/// cardinality bound at every p <= max_p, and its maxsize equals mu.
VerifyStats verify_tightness(unsigned max_n, unsigned max_k, unsigned max_p);

/// Random families: brute count <= KK* <= KK, plus the generalized chains
/// on valid random level extensions (Theorems 3 and 4 with clamping).
VerifyStats verify_sandwich(std::uint64_t trials, std::uint64_t seed,
                            const FamilyGenConfig& cfg, unsigned max_p);

/// The level recursion for generalized candidates agrees with direct
/// enumeration on random valid instances.
VerifyStats verify_recursion_equivalence(std::uint64_t trials,
                                         std::uint64_t seed,
                                         const FamilyGenConfig& cfg,
                                         unsigned max_p);

}  // namespace kkminer
