#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tirs {

/// Subset of a dense carrier 0..n-1 (lattice elements, digraph vertices, ground points).
using Bits = boost::dynamic_bitset<>;

Bits make_bits(std::size_t n, std::initializer_list<std::size_t> members);
Bits make_bits(std::size_t n, const std::vector<std::size_t>& members);

/// Members in increasing order.
std::vector<std::size_t> members(const Bits& set);

/// Total order on subsets: smaller sets first, ties broken by the sorted member lists.
bool subset_order_less(const Bits& lhs, const Bits& rhs);

/// "{0,2,3}" style rendering.
std::string format_set(const Bits& set);

/// Transpose of a square boolean matrix given as rows.
std::vector<Bits> transpose(const std::vector<Bits>& rows);

}  // namespace tirs
