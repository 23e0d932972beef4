#pragma once

#include <kkminer/generalized.hpp>
#include <kkminer/pattern_trie.hpp>
#include <kkminer/transactions.hpp>

#include <iosfwd>
#include <optional>
#include <vector>

namespace kkminer {

enum class BoundKind { kk, kk_star, gkk, gkk_star };

const char* to_string(BoundKind kind);
std::optional<BoundKind> bound_kind_from_string(const std::string& name);

struct MinerConfig {
  std::uint64_t minsup = 1;   // absolute threshold, support >= minsup
  bool strict_minsup = false; // interpret as support > minsup instead
  bool reorder = true;        // rare items get small ids
  BoundKind bound_kind = BoundKind::gkk_star;
  std::optional<Count> combine_limit;  // set: combine the remaining passes
                                       // once the total bound drops below it
  std::uint64_t combine_node_budget = 0;  // 0 = unlimited; else fall back to
                                          // level-by-level when the combined
                                          // candidate levels outgrow this
  bool parallel_count = true;
};

// One row of the per-level mining record. Bound columns are absent when
// the configured bound kind does not produce them.
struct BoundReport {
  unsigned level = 0;
  std::uint64_t freq_count = 0;
  std::uint64_t actual_next = 0;  // |C_{level+1}| the join/prune step yields
  std::optional<Count> kk_next, kkstar_next, gkkstar_next;
  std::optional<Count> mu_value, mu_star_value;
  std::optional<Count> kk_total_value, kkstar_total_value, gkkstar_total_value;
  double bound_ms = 0.0;
  double pass_ms = 0.0;
};

struct PatternWithSupport {
  ItemSet items;  // raw labels, ascending
  std::uint64_t support = 0;
};

struct MineResult {
  std::vector<PatternWithSupport> patterns;  // sorted by size, then colex
  std::vector<BoundReport> reports;          // one per completed level
  unsigned passes = 0;                       // database scans performed
  bool combined = false;
  bool combine_fallback = false;  // a combine attempt hit the node budget
  std::uint64_t combined_candidates_generated = 0;
};

MineResult mine(TransactionDB db, const MinerConfig& config);

/// CSV with the fixed column set; timing columns are not deterministic,
/// everything else is.
void write_stats(const std::vector<BoundReport>& reports, std::ostream& out);
void write_stats_file(const std::vector<BoundReport>& reports,
                      const std::string& path);

/// One "item item ... (support)" line per pattern.
void write_patterns(const std::vector<PatternWithSupport>& patterns,
                    std::ostream& out);

}  // namespace kkminer
