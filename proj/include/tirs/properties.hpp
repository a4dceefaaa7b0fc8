#pragma once

#include "tirs/lattice.hpp"

#include <string>
#include <vector>

namespace tirs {

/// Result of a lattice-side check. `witness` is empty iff the property holds;
/// otherwise it is the lexicographically first failing tuple in the order the
/// property's quantifiers are listed below.
struct PropertyReport {
  std::string property;
  bool holds = true;
  std::vector<Element> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// (a, b): a ^ b covered by a implies b covered by a v b.
PropertyReport is_usm(const FiniteLattice& lattice);
/// (a, b): a covered by a v b implies a ^ b covered by b.
PropertyReport is_lsm(const FiniteLattice& lattice);
/// (a, b, c) with a <= c: a v (b ^ c) = (a v b) ^ c.
PropertyReport is_modular(const FiniteLattice& lattice);
/// (a, b, c): a ^ (b v c) = (a ^ b) v (a ^ c).
PropertyReport is_distributive(const FiniteLattice& lattice);
/// (a, b, c): a v b = a v c implies a v b = a v (b ^ c).
PropertyReport is_jsd(const FiniteLattice& lattice);
/// (a, b, c): a ^ b = a ^ c implies a ^ b = a ^ (b v c).
PropertyReport is_msd(const FiniteLattice& lattice);
/// JSD and MSD; the witness is the JSD one when JSD fails.
PropertyReport is_sd(const FiniteLattice& lattice);
/// JSD's quasi-equation with a in M(L), b in J(L), c anywhere.
PropertyReport is_wjsd(const FiniteLattice& lattice);
/// (a in J, b in M): b covered by a v b implies a ^ b covered by a.
PropertyReport is_jm_lsm(const FiniteLattice& lattice);
/// (a in J, b in M): a ^ b covered by a implies b covered by a v b.
PropertyReport is_jm_usm(const FiniteLattice& lattice);
/// (a in J, b in M, a not below b): some MDFIP (a, c) with c >= b.
PropertyReport satisfies_labc(const FiniteLattice& lattice);
/// (a in J, b in M, a not below b): some MDFIP (c, b) with c <= a.
PropertyReport satisfies_uabc(const FiniteLattice& lattice);
/// (a) for every non-bottom a, the interval [mu(a), a] is distributive. The bottom
/// has no lower covers and is skipped.
PropertyReport is_meet_distributive(const FiniteLattice& lattice);

}  // namespace tirs
