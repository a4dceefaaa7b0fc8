#pragma once

#include "tirs/lattice.hpp"

#include <string>
#include <vector>

namespace tirs::fixtures {

// Named small lattices. Element labels follow the usual drawings: "0" and "1"
// for the bounds, letters for the rest.

/// 0 < a < 1 and 0 < c < b < 1.
FiniteLattice n5();
/// Covers 0<d, 0<e, d<a, d<b, e<b, e<c, a<1, b<1, c<1; meet-semidistributive, upper semimodular.
FiniteLattice l4();
/// Drawn independently of l4(): covers 0<c, 0<d, 0<e, c<a, d<a, d<b, e<b, a<1, b<1.
FiniteLattice l4_dual();
/// Three atoms a, b, c; a, b below d; d and c below 1. Satisfies JM-LSM but not LSM.
FiniteLattice l3_dual();
/// The diamond: three atoms a, b, c.
FiniteLattice m3();
/// Modular lattice 0<d<a, 0<e, e<a, e<b, e<c, a,b,c<1 whose dual digraph has an induced two-arc path.
FiniteLattice k();
/// The k-element chain 0 < 1 < ... < k-1.
FiniteLattice chain(std::size_t k);
/// The four-element Boolean lattice with atoms a, b.
FiniteLattice b2();

/// Looks up "N5", "L4", "L4D", "L3D", "M3", "K", "B2" or "CHAIN<k>".
FiniteLattice by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace tirs::fixtures
