#pragma once

#include "tirs/bits.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tirs {

/// Canonical labeling of a square boolean relation under simultaneous row/column
/// permutation. Two relations are isomorphic iff their codes are equal.
struct CanonicalForm {
  /// order[position] = original index placed at that position.
  std::vector<std::size_t> order;
  /// Row-major '0'/'1' string of the relation read in canonical order.
  std::string code;
};

/// Lexicographically least code over the leaves of an individualization-refinement
/// search. The refinement is colour refinement on out- and in-neighbour colours, so
/// every leaf is consistent with the degree/height invariants of the relation.
CanonicalForm canonical_form(const std::vector<Bits>& relation);

/// Relation read in the order given by `order` (new i = old order[i]).
std::string relation_code(const std::vector<Bits>& relation, const std::vector<std::size_t>& order);

}  // namespace tirs
