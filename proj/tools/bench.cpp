// Benchmarks for the two support-count kernels and the bound evaluation.
//
//   kkbench [--input FILE] [--minsup N] [--txns N] [--items N] [--seed S]
//
// Without --input a correlated synthetic database is generated: random
// source patterns are planted and transactions draw a few of them plus
// noise, which is what makes the candidate counts rise again after the
// early levels.

#include <kkminer/miner.hpp>
#include <kkminer/oracle.hpp>
#include <kkminer/support_count.hpp>
#include <kkminer/transactions.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace kkminer;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string synth_db_text(std::size_t n_txns, unsigned n_items,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const unsigned n_blocks = 40;
  std::uniform_int_distribution<unsigned> item_dist(0, n_items - 1);
  std::uniform_int_distribution<unsigned> len_dist(6, 14);
  std::vector<std::vector<unsigned>> blocks(n_blocks);
  for (auto& b : blocks) {
    const unsigned len = len_dist(rng);
    while (b.size() < len) b.push_back(item_dist(rng));
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::uniform_int_distribution<unsigned> block_pick(0, n_blocks - 1);
  std::uniform_int_distribution<unsigned> noise_dist(5, 25);
  std::ostringstream out;
  std::vector<unsigned> txn;
  for (std::size_t i = 0; i < n_txns; ++i) {
    txn.clear();
    const unsigned picks = 1 + (rng() % 3);
    for (unsigned j = 0; j < picks; ++j) {
      const auto& b = blocks[block_pick(rng)];
      txn.insert(txn.end(), b.begin(), b.end());
    }
    const unsigned noise = noise_dist(rng);
    for (unsigned j = 0; j < noise; ++j) txn.push_back(item_dist(rng));
    std::sort(txn.begin(), txn.end());
    txn.erase(std::unique(txn.begin(), txn.end()), txn.end());
    for (std::size_t j = 0; j < txn.size(); ++j)
      out << (j ? " " : "") << txn[j];
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string input;
  std::size_t n_txns = 50000;
  unsigned n_items = 400;
  std::uint64_t minsup = 500;
  std::uint64_t seed = 7;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << a << "\n";
        std::exit(1);
      }
      return argv[++i];
    };
    if (a == "--input")
      input = next();
    else if (a == "--minsup")
      minsup = std::stoull(next());
    else if (a == "--txns")
      n_txns = std::stoull(next());
    else if (a == "--items")
      n_items = static_cast<unsigned>(std::stoul(next()));
    else if (a == "--seed")
      seed = std::stoull(next());
    else {
      std::cerr << "usage: kkbench [--input FILE] [--minsup N] [--txns N]"
                   " [--items N] [--seed S]\n";
      return 1;
    }
  }

  TransactionDB db;
  if (!input.empty()) {
    db = TransactionDB::load_file(input);
    std::cout << "dataset: " << input << "\n";
  } else {
    std::istringstream ss(synth_db_text(n_txns, n_items, seed));
    db = TransactionDB::load(ss);
    std::cout << "dataset: synthetic (" << n_txns << " txns, " << n_items
              << " items)\n";
  }
  db.assign_ids(true);
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << "transactions: " << db.transaction_count()
            << ", items: " << db.item_count() << ", minsup: " << minsup
            << "\n\n";

  // levelwise mining, timing each pass with both kernels
  PatternTrie trie;
  {
    TrieNode& root = trie.mutable_root();
    root.children.resize(db.item_count());
    for (std::size_t i = 0; i < db.item_count(); ++i)
      root.children[i].item = static_cast<Item>(i);
  }
  std::cout << "level |L_k|      |C_k+1|    serial_ms   parallel_ms  speedup\n";
  unsigned level = 1;
  for (;;) {
    TrieNode& root = trie.mutable_root();
    const std::uint32_t slots = assign_slots(root, level, level);

    auto t0 = Clock::now();
    const auto serial =
        count_supports_serial(root, db.transactions(), slots, level);
    const double serial_ms = ms_since(t0);

    t0 = Clock::now();
    const auto parallel =
        count_supports_parallel(root, db.transactions(), slots, level);
    const double parallel_ms = ms_since(t0);

    if (serial != parallel) {
      std::cerr << "KERNEL MISMATCH at level " << level << "\n";
      return 1;
    }
    store_supports(root, parallel, level);
    trie.prune_level(level, minsup);
    const std::uint64_t freq = trie.count_at_level(level);
    const std::uint64_t next = trie.extend_level(level);
    std::printf("%5u %-10llu %-10llu %-12.2f %-12.2f %.2fx\n", level,
                static_cast<unsigned long long>(freq),
                static_cast<unsigned long long>(next), serial_ms, parallel_ms,
                serial_ms / std::max(parallel_ms, 0.001));
    if (next == 0) break;
    ++level;
  }

  // bound evaluation cost against trie size: colex prefixes of growing n
  std::cout << "\nbound evaluation (colex families, k=5):\n";
  std::cout << "nodes        eval_ms\n";
  for (std::size_t n = 100; n <= 204800; n *= 2) {
    PatternTrie family;
    for (const ItemSet& s : oracle::colex_family(n, 5)) family.insert(s);
    const std::size_t nodes = family.node_count();
    auto t0 = Clock::now();
    const BoundSet bs = evaluate_bounds(&family.root(), 5);
    const double eval_ms = ms_since(t0);
    std::printf("%-12zu %.3f   (kk*_total=%s)\n", nodes, eval_ms,
                bs.kk_star_total.get_str().c_str());
  }
  return 0;
}
