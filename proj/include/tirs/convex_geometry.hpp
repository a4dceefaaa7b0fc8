#pragma once

#include "tirs/bits.hpp"
#include "tirs/digraph.hpp"
#include "tirs/lattice.hpp"

#include <string>
#include <vector>

namespace tirs {

/// A closure system on the ground set 0..k-1, stored as its family of closed sets.
/// The family must contain the ground set and be closed under intersection;
/// construction rejects anything else with InvalidClosureSystem.
class ClosureSystem {
 public:
  ClosureSystem(std::size_t ground, std::vector<Bits> closed, std::vector<std::string> ground_labels = {});

  std::size_t ground_size() const noexcept { return ground_; }
  /// Sorted by size, then by member list.
  const std::vector<Bits>& closed_sets() const noexcept { return closed_; }
  const std::vector<std::string>& ground_labels() const noexcept { return labels_; }

  bool is_closed(const Bits& set) const;
  /// Smallest closed superset.
  Bits closure_of(const Bits& set) const;

 private:
  std::size_t ground_;
  std::vector<Bits> closed_;
  std::vector<std::string> labels_;
};

Bits closure_of(const ClosureSystem& system, const Bits& set);

/// The empty set is closed.
bool is_zero_closure(const ClosureSystem& system);

/// For every closed A and distinct x, y outside A: x in cl(A + y) implies
/// y not in cl(A + x). Witness: (index of A in closed_sets(), x, y).
Verdict satisfies_aep(const ClosureSystem& system);

/// Closed sets ordered by inclusion; labels are the closed sets themselves.
FiniteLattice cld_lattice(const ClosureSystem& system);

/// Ground set J(L); closed sets are the sets of join-irreducibles below each
/// element. Works for every finite lattice.
ClosureSystem join_irreducible_closure_system(const FiniteLattice& lattice);

/// join_irreducible_closure_system, guarded: throws NotMeetDistributive unless
/// the lattice is meet-distributive.
ClosureSystem lattice_to_convex_geometry(const FiniteLattice& lattice);

/// Every convex geometry (zero-closure system with the anti-exchange property)
/// on ground sets of size 0..max_ground, as labelled families. max_ground <= 4.
std::vector<ClosureSystem> enumerate_convex_geometries(std::size_t max_ground);

}  // namespace tirs
