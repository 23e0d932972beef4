#pragma once

#include <kkminer/itemset.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace kkminer {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

// A transaction database. Items enter as raw nonnegative integer labels;
// assign_ids() maps them onto dense ids 0..m-1, optionally ordered by
// increasing frequency so that rare items sit at the front of every
// pattern (which is where the recursive bounds lose information).
class TransactionDB {
 public:
  /// Text format: one transaction per line, whitespace-separated integer
  /// labels. Duplicates within a line collapse; empty lines are skipped.
  /// Throws ParseError (with line number) on a non-integer token.
  static TransactionDB load(std::istream& in);
  static TransactionDB load_file(const std::string& path);

  void assign_ids(bool reorder_by_frequency);

  std::size_t transaction_count() const { return transactions_.size(); }
  std::size_t item_count() const { return id_to_label_.size(); }
  const std::vector<ItemSet>& transactions() const { return transactions_; }

  std::uint64_t label_count(std::uint32_t label) const;
  Item id_of(std::uint32_t label) const;
  std::uint32_t label_of(Item id) const { return id_to_label_.at(id); }
  ItemSet to_labels(const ItemSet& dense) const;

  bool ids_assigned() const { return !id_to_label_.empty(); }

 private:
  std::vector<ItemSet> transactions_;  // raw labels until assign_ids
  std::vector<std::pair<std::uint32_t, std::uint64_t>> label_counts_;  // sorted by label
  std::vector<std::uint32_t> id_to_label_;
};

}  // namespace kkminer
