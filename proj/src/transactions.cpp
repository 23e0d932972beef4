#include <kkminer/transactions.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <unordered_map>

namespace kkminer {

TransactionDB TransactionDB::load(std::istream& in) {
  TransactionDB db;
  std::unordered_map<std::uint32_t, std::uint64_t> counts;
  std::string line;
  std::size_t line_no = 0;
  ItemSet txn;
  while (std::getline(in, line)) {
    ++line_no;
    txn.clear();
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
      if (*p == ' ' || *p == '\t' || *p == '\r') {
        ++p;
        continue;
      }
      std::uint32_t value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc() ||
          (next != end && *next != ' ' && *next != '\t' && *next != '\r')) {
        throw ParseError(line_no, "expected a nonnegative integer item, got '" +
                                      std::string(p, next == p ? end : next) +
                                      "'");
      }
      txn.push_back(value);
      p = next;
    }
    if (txn.empty()) continue;
    std::sort(txn.begin(), txn.end());
    txn.erase(std::unique(txn.begin(), txn.end()), txn.end());
    for (Item v : txn) ++counts[v];
    db.transactions_.push_back(txn);
  }
  db.label_counts_.assign(counts.begin(), counts.end());
  std::sort(db.label_counts_.begin(), db.label_counts_.end());
  return db;
}

TransactionDB TransactionDB::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load(in);
}

void TransactionDB::assign_ids(bool reorder_by_frequency) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> order = label_counts_;
  if (reorder_by_frequency) {
    // rare items first; ties fall back to ascending label
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) {
                       if (a.second != b.second) return a.second < b.second;
                       return a.first < b.first;
                     });
  }
  id_to_label_.resize(order.size());
  std::unordered_map<std::uint32_t, Item> to_id;
  to_id.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    id_to_label_[i] = order[i].first;
    to_id[order[i].first] = static_cast<Item>(i);
  }
  for (ItemSet& txn : transactions_) {
    for (Item& v : txn) v = to_id[v];
    std::sort(txn.begin(), txn.end());
  }
}

std::uint64_t TransactionDB::label_count(std::uint32_t label) const {
  auto it = std::lower_bound(
      label_counts_.begin(), label_counts_.end(), label,
      [](const auto& a, std::uint32_t v) { return a.first < v; });
  if (it == label_counts_.end() || it->first != label) return 0;
  return it->second;
}

Item TransactionDB::id_of(std::uint32_t label) const {
  for (std::size_t i = 0; i < id_to_label_.size(); ++i)
    if (id_to_label_[i] == label) return static_cast<Item>(i);
  throw std::out_of_range("unknown label " + std::to_string(label));
}

ItemSet TransactionDB::to_labels(const ItemSet& dense) const {
  ItemSet out;
  out.reserve(dense.size());
  for (Item id : dense) out.push_back(id_to_label_[id]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kkminer
