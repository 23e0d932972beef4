#include <kkminer/itemset.hpp>

#include <algorithm>
#include <sstream>

namespace kkminer {

bool is_sorted_unique(std::span<const Item> s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

bool colex_less(std::span<const Item> a, std::span<const Item> b) {
  auto ia = a.rbegin(), ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.rend() && ib != b.rend();
}

bool size_colex_less(const ItemSet& a, const ItemSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return colex_less(a, b);
}

bool is_subset(std::span<const Item> sub, std::span<const Item> super) {
  std::size_t j = 0;
  for (Item v : sub) {
    while (j < super.size() && super[j] < v) ++j;
    if (j == super.size() || super[j] != v) return false;
    ++j;
  }
  return true;
}

std::string format_itemset(std::span<const Item> s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  return out.str();
}

}  // namespace kkminer
