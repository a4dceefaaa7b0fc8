#pragma once

#include "tirs/lattice.hpp"

#include <compare>

namespace tirs {

/// Maximal disjoint filter-ideal pair <up(filter), down(ideal)> of a finite lattice.
struct Mdfip {
  Element filter;
  Element ideal;
  auto operator<=>(const Mdfip&) const = default;
};

}  // namespace tirs
