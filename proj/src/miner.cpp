#include <kkminer/miner.hpp>

#include <kkminer/support_count.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

namespace kkminer {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct LevelBounds {
  BoundSet plain;
  GeneralizedBounds general;
  bool has_general = false;
};

bool wants_star(BoundKind k) {
  return k == BoundKind::kk_star || k == BoundKind::gkk_star;
}
bool wants_general(BoundKind k) {
  return k == BoundKind::gkk || k == BoundKind::gkk_star;
}

// The level at which the configured bound proves no candidate can exist
// beyond it. Mining stops once this equals the current level.
Count horizon(const LevelBounds& b, BoundKind kind) {
  switch (kind) {
    case BoundKind::kk:
      return b.plain.mu;
    case BoundKind::kk_star:
      return b.plain.mu_star;
    case BoundKind::gkk:
      return b.general.g_mu;
    case BoundKind::gkk_star:
      return b.general.g_mu_star;
  }
  return b.plain.mu;
}

Count total_bound(const LevelBounds& b, BoundKind kind) {
  switch (kind) {
    case BoundKind::kk:
      return b.plain.kk_total;
    case BoundKind::kk_star:
      return b.plain.kk_star_total;
    case BoundKind::gkk:
      return b.general.gkk_total;
    case BoundKind::gkk_star:
      return b.general.gkk_star_total;
  }
  return b.plain.kk_total;
}

void fill_report_bounds(BoundReport& row, const LevelBounds& b,
                        BoundKind kind) {
  const unsigned k = row.level;
  row.kk_next = b.plain.kk_at(k + 1);
  row.mu_value = b.plain.mu;
  row.kk_total_value = b.plain.kk_total;
  if (wants_star(kind)) {
    row.kkstar_next = b.plain.kk_star_at(k + 1);
    row.mu_star_value = b.plain.mu_star;
    row.kkstar_total_value = b.plain.kk_star_total;
  }
  if (kind == BoundKind::gkk_star && b.has_general) {
    row.gkkstar_next = b.general.gkk_star_at(k + 1);
    row.gkkstar_total_value = b.general.gkk_star_total;
  }
}

struct MinerState {
  PatternTrie trie;
  const TransactionDB* db = nullptr;
  MinerConfig cfg;
  std::uint64_t eff_minsup = 1;
  std::vector<ItemSet> last_infrequent;  // pruned at the last counted level

  void count_levels(unsigned from, unsigned to) {
    TrieNode& root = trie.mutable_root();
    const std::uint32_t slots = assign_slots(root, from, to);
    const auto counts =
        cfg.parallel_count
            ? count_supports_parallel(root, db->transactions(), slots, to)
            : count_supports_serial(root, db->transactions(), slots, to);
    store_supports(root, counts, to);
  }

  LevelBounds bounds_at(unsigned level) {
    LevelBounds out;
    out.plain = evaluate_bounds(&trie.root(), level);
    if (wants_general(cfg.bound_kind)) {
      out.general = evaluate_generalized(&trie.root(), level, {},
                                         last_infrequent);
      out.has_general = true;
    }
    return out;
  }
};

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kk:
      return "kk";
    case BoundKind::kk_star:
      return "kk_star";
    case BoundKind::gkk:
      return "gkk";
    case BoundKind::gkk_star:
      return "gkk_star";
  }
  return "?";
}

std::optional<BoundKind> bound_kind_from_string(const std::string& name) {
  if (name == "kk") return BoundKind::kk;
  if (name == "kk_star") return BoundKind::kk_star;
  if (name == "gkk") return BoundKind::gkk;
  if (name == "gkk_star") return BoundKind::gkk_star;
  return std::nullopt;
}

MineResult mine(TransactionDB db, const MinerConfig& config) {
  if (config.minsup < 1) throw std::invalid_argument("minsup must be >= 1");
  MineResult result;
  if (!db.ids_assigned()) db.assign_ids(config.reorder);

  MinerState st;
  st.db = &db;
  st.cfg = config;
  st.eff_minsup = config.minsup + (config.strict_minsup ? 1 : 0);

  {
    // level-1 candidates: every observed item
    TrieNode& root = st.trie.mutable_root();
    root.children.resize(db.item_count());
    for (std::size_t i = 0; i < db.item_count(); ++i)
      root.children[i].item = static_cast<Item>(i);
  }

  bool combining_disabled = false;
  unsigned level = 1;
  for (;;) {
    const auto pass_start = Clock::now();
    st.count_levels(level, level);
    st.last_infrequent = st.trie.prune_level(level, st.eff_minsup);
    const double pass_ms = ms_since(pass_start);
    ++result.passes;

    BoundReport row;
    row.level = level;
    row.freq_count = st.trie.count_at_level(level);
    row.pass_ms = pass_ms;

    if (row.freq_count == 0) {
      result.reports.push_back(std::move(row));
      break;
    }

    const auto bound_start = Clock::now();
    LevelBounds lb = st.bounds_at(level);
    row.bound_ms = ms_since(bound_start);
    fill_report_bounds(row, lb, config.bound_kind);

    // nothing can follow this level: stop without another generation
    if (horizon(lb, config.bound_kind) <= level) {
      result.reports.push_back(std::move(row));
      break;
    }

    // combine the remaining passes once the total bound fits the limit
    if (config.combine_limit && !combining_disabled &&
        total_bound(lb, config.bound_kind) <= *config.combine_limit) {
      std::uint64_t materialized = 0;
      std::vector<std::uint64_t> added_at;  // [j] = candidates of size level+1+j
      bool over_budget = false;
      for (unsigned j = level;; ++j) {
        const std::uint64_t added = st.trie.extend_level(j);
        if (added == 0) break;
        materialized += added;
        added_at.push_back(added);
        if (config.combine_node_budget &&
            materialized > config.combine_node_budget) {
          over_budget = true;
          break;
        }
      }
      if (over_budget) {
        st.trie.erase_below(level);
        result.combine_fallback = true;
        combining_disabled = true;
      } else if (materialized == 0) {
        result.reports.push_back(std::move(row));
        break;
      } else {
        result.combined = true;
        result.combined_candidates_generated = materialized;
        const unsigned maxd = level + static_cast<unsigned>(added_at.size());

        const auto scan_start = Clock::now();
        st.count_levels(level + 1, maxd);
        ++result.passes;

        // keep a pattern only if frequent itself and every immediate
        // subset survived, walking the levels upward
        for (unsigned j = level + 1; j <= maxd; ++j) {
          TrieNode& root = st.trie.mutable_root();
          ItemSet path;
          std::function<void(TrieNode&, unsigned)> walk = [&](TrieNode& nd,
                                                              unsigned depth) {
            if (depth == j - 1) {
              std::erase_if(nd.children, [&](const TrieNode& c) {
                if (c.support < st.eff_minsup) return true;
                path.push_back(c.item);
                bool dead = false;
                ItemSet probe;
                for (std::size_t drop = 0; drop + 1 < path.size() && !dead;
                     ++drop) {
                  probe.clear();
                  for (std::size_t t = 0; t < path.size(); ++t)
                    if (t != drop) probe.push_back(path[t]);
                  dead = !st.trie.contains(probe);
                }
                path.pop_back();
                return dead;
              });
              return;
            }
            for (TrieNode& c : nd.children) {
              path.push_back(c.item);
              walk(c, depth + 1);
              path.pop_back();
            }
          };
          walk(root, 0);
        }
        const double scan_ms = ms_since(scan_start);

        // the row for the decision level reports the next level's
        // candidates exactly as an uncombined run would generate them
        row.actual_next = st.trie.generate_candidates(level).size();
        result.reports.push_back(std::move(row));

        for (unsigned j = level + 1; j <= maxd; ++j) {
          BoundReport crow;
          crow.level = j;
          crow.freq_count = st.trie.count_at_level(j);
          crow.pass_ms = j == level + 1 ? scan_ms : 0.0;
          if (crow.freq_count > 0) {
            const auto bstart = Clock::now();
            BoundSet bs = evaluate_bounds(&st.trie.root(), j);
            crow.bound_ms = ms_since(bstart);
            LevelBounds clb;
            clb.plain = std::move(bs);
            // level-by-level foresight is gone after a combined scan, so
            // the generalized columns stay empty on these rows
            fill_report_bounds(crow, clb,
                               config.bound_kind == BoundKind::gkk_star
                                   ? BoundKind::kk_star
                                   : config.bound_kind);
            crow.actual_next = st.trie.generate_candidates(j).size();
          }
          result.reports.push_back(std::move(crow));
        }
        break;
      }
    }

    const std::uint64_t generated = st.trie.extend_level(level);
    row.actual_next = generated;
    result.reports.push_back(std::move(row));
    if (generated == 0) break;
    ++level;
  }

  // harvest the trie: every stored node is one frequent pattern
  const unsigned maxd = st.trie.max_depth();
  for (unsigned j = 1; j <= maxd; ++j) {
    st.trie.for_each_at_level(j, [&](const ItemSet& s, const TrieNode& nd) {
      result.patterns.push_back({db.to_labels(s), nd.support});
    });
  }
  std::sort(result.patterns.begin(), result.patterns.end(),
            [](const PatternWithSupport& a, const PatternWithSupport& b) {
              return size_colex_less(a.items, b.items);
            });
  return result;
}

namespace {

void put(std::ostream& out, const std::optional<Count>& v) {
  out << ',';
  if (v) out << v->get_str();
}

}  // namespace

void write_stats(const std::vector<BoundReport>& reports, std::ostream& out) {
  out << "level,freq_count,actual_next,kk_next,kkstar_next,gkkstar_next,mu,"
         "mu_star,kk_total,kkstar_total,gkkstar_total,bound_ms,pass_ms\n";
  char buf[64];
  for (const BoundReport& r : reports) {
    out << r.level << ',' << r.freq_count << ',' << r.actual_next;
    put(out, r.kk_next);
    put(out, r.kkstar_next);
    put(out, r.gkkstar_next);
    put(out, r.mu_value);
    put(out, r.mu_star_value);
    put(out, r.kk_total_value);
    put(out, r.kkstar_total_value);
    put(out, r.gkkstar_total_value);
    std::snprintf(buf, sizeof buf, ",%.3f,%.3f", r.bound_ms, r.pass_ms);
    out << buf << '\n';
  }
}

void write_stats_file(const std::vector<BoundReport>& reports,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write stats to " + path);
  write_stats(reports, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_patterns(const std::vector<PatternWithSupport>& patterns,
                    std::ostream& out) {
  for (const PatternWithSupport& p : patterns) {
    out << format_itemset(p.items) << " (" << p.support << ")\n";
  }
}

}  // namespace kkminer
