#include <CLI11.hpp>

#include <kkminer/kk.hpp>
#include <kkminer/miner.hpp>
#include <kkminer/verify.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace kkminer;

// exit codes: 0 ok, 1 usage, 2 i/o or parse, 3 verification failure,
// 4 combining fell back to level-by-level (run still succeeded)

struct MineArgs {
  std::string input;
  std::string output;
  std::string stats;
  std::uint64_t minsup = 1;
  bool strict = false;
  bool reorder = true;
  bool serial = false;
  std::string bound = "gkk_star";
  std::string combine_limit;
  std::uint64_t combine_budget = 0;
};

struct BoundsArgs {
  std::string patterns;
  std::string frequent;
  std::string infrequent;
  std::string kind = "kk_star";
  unsigned p = 0;  // 0: all levels
};

struct VerifyArgs {
  unsigned max_n = 200;
  unsigned max_k = 5;
  unsigned max_p = 4;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
};

std::vector<ItemSet> read_pattern_file(const std::string& path,
                                       bool uniform_size) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ItemSet> out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t expect = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    ItemSet s;
    long long v;
    while (ss >> v) {
      if (v < 0)
        throw ParseError(line_no, "negative item '" + std::to_string(v) + "'");
      s.push_back(static_cast<Item>(v));
    }
    if (!ss.eof()) {
      std::string tok;
      ss.clear();
      ss >> tok;
      throw ParseError(line_no, "expected an integer item, got '" + tok + "'");
    }
    if (s.empty()) continue;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (uniform_size) {
      if (expect == 0) expect = s.size();
      if (s.size() != expect)
        throw ParseError(line_no, "itemset has size " +
                                      std::to_string(s.size()) +
                                      ", expected " + std::to_string(expect));
    }
    out.push_back(std::move(s));
  }
  return out;
}

int cmd_mine(const MineArgs& args) {
  MinerConfig cfg;
  cfg.minsup = args.minsup;
  cfg.strict_minsup = args.strict;
  cfg.reorder = args.reorder;
  cfg.parallel_count = !args.serial;
  cfg.combine_node_budget = args.combine_budget;
  if (auto kind = bound_kind_from_string(args.bound)) {
    cfg.bound_kind = *kind;
  } else {
    std::cerr << "unknown bound kind '" << args.bound << "'\n";
    return 1;
  }
  if (!args.combine_limit.empty()) {
    try {
      cfg.combine_limit = Count(args.combine_limit);
    } catch (const std::invalid_argument&) {
      std::cerr << "--combine-limit: '" << args.combine_limit
                << "' is not a nonnegative integer\n";
      return 1;
    }
    if (*cfg.combine_limit < 0) {
      std::cerr << "--combine-limit must be >= 0\n";
      return 1;
    }
  }

  try {
    TransactionDB db = TransactionDB::load_file(args.input);
    MineResult res = mine(std::move(db), cfg);

    if (!args.stats.empty()) write_stats_file(res.reports, args.stats);
    if (!args.output.empty()) {
      std::ofstream out(args.output);
      if (!out) throw std::runtime_error("cannot write " + args.output);
      write_patterns(res.patterns, out);
    } else {
      write_patterns(res.patterns, std::cout);
    }
    std::cerr << res.patterns.size() << " frequent patterns, " << res.passes
              << " database passes";
    if (res.combined) std::cerr << " (combined)";
    if (res.combine_fallback)
      std::cerr << " (combining fell back: candidate budget exceeded)";
    std::cerr << "\n";
    return res.combine_fallback ? 4 : 0;
  } catch (const std::exception& e) {
    std::cerr << args.input << ": " << e.what() << "\n";
    return 2;
  }
}

int cmd_bounds(const BoundsArgs& args) {
  try {
    LevelFamilies fam;
    std::vector<ItemSet> base = read_pattern_file(args.patterns, true);
    if (base.empty()) {
      std::cerr << args.patterns << ": no patterns\n";
      return 2;
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    const unsigned k = static_cast<unsigned>(base.front().size());
    fam.base_level = k;
    fam.L.push_back(std::move(base));
    fam.I.emplace_back();

    auto add_levels = [&](const std::string& path, bool frequent) {
      if (path.empty()) return;
      auto& dst = frequent ? fam.L : fam.I;
      for (ItemSet& s : read_pattern_file(path, false)) {
        if (s.size() < k || (frequent && s.size() == k))
          throw std::runtime_error(
              path + ": side pattern {" + format_itemset(s) +
              "} must be larger than the base size " + std::to_string(k));
        const std::size_t off = s.size() - k;
        if (dst.size() <= off) dst.resize(off + 1);
        dst[off].push_back(std::move(s));
      }
      for (auto& lvl : dst) {
        std::sort(lvl.begin(), lvl.end());
        lvl.erase(std::unique(lvl.begin(), lvl.end()), lvl.end());
      }
    };
    add_levels(args.frequent, true);
    add_levels(args.infrequent, false);

    const bool general = args.kind == "gkk" || args.kind == "gkk_star" ||
                         !args.frequent.empty() || !args.infrequent.empty();
    if (auto err = validate(fam)) {
      std::cerr << "invalid input families: " << *err << "\n";
      return 2;
    }

    PatternTrie trie;
    for (const ItemSet& s : fam.L[0]) trie.insert(s);
    const BoundSet bs = evaluate_bounds(&trie.root(), k);
    GeneralizedBounds gb;
    if (general) gb = evaluate_generalized(fam);

    const bool star = args.kind != "kk" && args.kind != "gkk";
    std::cout << "patterns: " << bs.family_size.get_str() << " of size " << k
              << "\n";
    Count last_level = bs.mu;
    auto print_level = [&](unsigned target) {
      std::cout << "level " << target << ": kk=" << bs.kk_at(target).get_str();
      if (star) std::cout << " kk_star=" << bs.kk_star_at(target).get_str();
      if (general) {
        std::cout << " gkk=" << gb.gkk_at(target).get_str();
        if (star)
          std::cout << " gkk_star=" << gb.gkk_star_at(target).get_str();
      }
      std::cout << "\n";
    };
    if (args.p > 0) {
      print_level(k + args.p);
    } else if (last_level > k && last_level.fits_ulong_p()) {
      for (unsigned long t = k + 1; t <= last_level.get_ui(); ++t)
        print_level(static_cast<unsigned>(t));
    }
    std::cout << "mu=" << bs.mu.get_str();
    if (star) std::cout << " mu_star=" << bs.mu_star.get_str();
    if (general) {
      std::cout << " g_mu=" << gb.g_mu.get_str();
      if (star) std::cout << " g_mu_star=" << gb.g_mu_star.get_str();
    }
    std::cout << "\n";
    std::cout << "kk_total=" << bs.kk_total.get_str();
    if (star) std::cout << " kk_star_total=" << bs.kk_star_total.get_str();
    if (general) {
      std::cout << " gkk_total=" << gb.gkk_total.get_str();
      if (star)
        std::cout << " gkk_star_total=" << gb.gkk_star_total.get_str();
    }
    std::cout << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const VerifyArgs& args) {
  bool failed = false;
  auto report = [&](const char* name, const VerifyStats& st) {
    std::cout << name << ": " << st.checks << " checks, " << st.failures
              << " failures\n";
    for (const auto& m : st.messages) std::cout << "  " << m << "\n";
    if (!st.ok()) failed = true;
  };

  if (args.max_n > 0) {
    report("tightness",
           verify_tightness(args.max_n, args.max_k, args.max_p));
  } else {
    std::cout << "tightness: skipped (max-n 0)\n";
  }
  FamilyGenConfig cfg;
  cfg.max_k = args.max_k;
  if (args.trials > 0) {
    report("sandwich chains",
           verify_sandwich(args.trials, args.seed, cfg, args.max_p));
    report("recursion equivalence",
           verify_recursion_equivalence(std::min<std::uint64_t>(args.trials, 200),
                                        args.seed, cfg, args.max_p));
  }
  return failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"levelwise frequent-itemset miner with candidate-count bounds"};
  app.require_subcommand(1);

  MineArgs margs;
  CLI::App* mine_cmd = app.add_subcommand(
      "mine", "mine frequent itemsets from a transaction file");
  mine_cmd->add_option("--input", margs.input, "transaction file")
      ->required()
      ->check(CLI::ExistingFile);
  mine_cmd->add_option("--minsup", margs.minsup, "absolute support threshold")
      ->required()
      ->check(CLI::PositiveNumber);
  mine_cmd->add_flag("--strict-minsup", margs.strict,
                     "frequent means support > minsup instead of >=");
  mine_cmd->add_flag("--reorder,!--no-reorder", margs.reorder,
                     "reassign item ids by increasing frequency (default on)");
  mine_cmd->add_flag("--serial", margs.serial,
                     "disable the parallel support-count kernel");
  mine_cmd->add_option("--bound", margs.bound,
                       "bound kind: kk, kk_star, gkk, gkk_star")
      ->check(CLI::IsMember({"kk", "kk_star", "gkk", "gkk_star"}));
  mine_cmd->add_option("--combine-limit", margs.combine_limit,
                       "combine all remaining passes once the total bound "
                       "is at most this many candidates");
  mine_cmd->add_option("--combine-budget", margs.combine_budget,
                       "abort a combined pass that materializes more than "
                       "this many candidates (0 = unlimited)");
  mine_cmd->add_option("--stats", margs.stats, "write per-level CSV here");
  mine_cmd->add_option("--output", margs.output,
                       "write patterns here instead of stdout");

  BoundsArgs bargs;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "evaluate candidate bounds for a pattern family");
  bounds_cmd->add_option("--patterns", bargs.patterns,
                         "file with one itemset per line (uniform size)")
      ->required()
      ->check(CLI::ExistingFile);
  bounds_cmd->add_option("--p", bargs.p, "report a single level k+p")
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_flag("--all", [](std::int64_t) {},
                       "report every level up to mu (default)");
  bounds_cmd->add_option("--kind", bargs.kind,
                         "bound kind: kk, kk_star, gkk, gkk_star")
      ->check(CLI::IsMember({"kk", "kk_star", "gkk", "gkk_star"}));
  bounds_cmd->add_option("--frequent", bargs.frequent,
                         "known frequent sets larger than the base size")
      ->check(CLI::ExistingFile);
  bounds_cmd->add_option("--infrequent", bargs.infrequent,
                         "known infrequent sets")
      ->check(CLI::ExistingFile);

  VerifyArgs vargs;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run the brute-force oracle sweeps against the bounds");
  verify_cmd->add_option("--max-n", vargs.max_n, "largest family size");
  verify_cmd->add_option("--max-k", vargs.max_k, "largest base level")
      ->check(CLI::Range(2u, 8u));
  verify_cmd->add_option("--max-p", vargs.max_p, "largest lookahead")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vargs.seed, "random family seed");
  verify_cmd->add_option("--trials", vargs.trials, "random families to draw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (mine_cmd->parsed()) return cmd_mine(margs);
  if (bounds_cmd->parsed()) return cmd_bounds(bargs);
  if (verify_cmd->parsed()) return cmd_verify(vargs);
  return 1;
}
