#include "tirs/bits.hpp"

#include <algorithm>

namespace tirs {

Bits make_bits(std::size_t n, std::initializer_list<std::size_t> list) {
  Bits out(n);
  for (auto m : list) out.set(m);
  return out;
}

Bits make_bits(std::size_t n, const std::vector<std::size_t>& list) {
  Bits out(n);
  for (auto m : list) out.set(m);
  return out;
}

std::vector<std::size_t> members(const Bits& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

bool subset_order_less(const Bits& lhs, const Bits& rhs) {
  const auto lc = lhs.count();
  const auto rc = rhs.count();
  if (lc != rc) return lc < rc;
  const auto lm = members(lhs);
  const auto rm = members(rhs);
  return std::lexicographical_compare(lm.begin(), lm.end(), rm.begin(), rm.end());
}

std::string format_set(const Bits& set) {
  std::string out = "{";
  bool first = true;
  for (auto m : members(set)) {
    if (!first) out += ',';
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

std::vector<Bits> transpose(const std::vector<Bits>& rows) {
  const auto n = rows.size();
  std::vector<Bits> cols(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (auto j = rows[i].find_first(); j != Bits::npos; j = rows[i].find_next(j)) cols[j].set(i);
  return cols;
}

}  // namespace tirs
