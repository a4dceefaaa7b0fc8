#pragma once

#include "tirs/digraph.hpp"
#include "tirs/lattice.hpp"
#include "tirs/mdfip.hpp"

#include <optional>
#include <vector>

namespace tirs {

/// Partial map from digraph vertices into {0, 1}, stored as its two preimages.
struct PartialTwoMap {
  Bits ones;
  Bits zeros;

  std::optional<bool> value(Vertex x) const;
  bool operator==(const PartialTwoMap&) const = default;
};

/// No arc leads from a vertex valued 1 to a vertex valued 0, and the preimages are disjoint.
bool preserves_arcs(const Digraph& g, const PartialTwoMap& map);

/// E-preserving and no single undefined vertex can be given either value. Since
/// restrictions of E-preserving maps are E-preserving, this is full maximality.
bool is_maximal_preserving(const Digraph& g, const PartialTwoMap& map);

/// MDFIPs via the irreducible/cover characterisation: filter generator a in J(L),
/// ideal generator b in M(L), a not below b, b covered by a v b, a ^ b covered by a.
/// Sorted by (filter, ideal).
std::vector<Mdfip> mdfips(const FiniteLattice& lattice);

/// MDFIPs straight from the definition: disjoint pairs with no strictly larger
/// disjoint pair. Independent of `mdfips`; used as its oracle.
std::vector<Mdfip> mdfips_bruteforce(const FiniteLattice& lattice);

/// Vertices are mdfips(L) in order, x -> y iff x.filter is not below y.ideal.
/// Vertex names concatenate the element labels ("ab").
Digraph dual_digraph(const FiniteLattice& lattice);

/// MDFIPs (a', b') with a' <= a and b' >= b. Throws NotDisjoint when a <= b.
std::vector<Mdfip> maximal_extensions(const FiniteLattice& lattice, Element a, Element b);

/// All maximal partial E-preserving maps into the two-element chain, smallest
/// ones-set first (ties by sorted member list). Throws NotReflexive.
///
/// For a reflexive digraph a maximal map is determined by its ones-set X: its
/// zeros are exactly the vertices no arc from X reaches, and the ones-sets are
/// the intersections of the sets {v : v has no arc to z}. The family is built by
/// closing those generators under intersection.
std::vector<PartialTwoMap> mpe_enumerate(const Digraph& g);

/// The lattice of maximal maps ordered by inclusion of ones-sets. Elements follow
/// mpe_enumerate order. Throws NotALattice if the order is not a lattice order.
FiniteLattice mpe_lattice(const Digraph& g);

/// L is isomorphic to the lattice of maximal maps of its dual digraph.
bool roundtrip_lattice(const FiniteLattice& lattice);
/// G is isomorphic to the dual digraph of its lattice of maximal maps.
bool roundtrip_digraph(const Digraph& g);

/// { m in M(L) : b <= m, a not below m }.
std::vector<Element> t_set(const FiniteLattice& lattice, Element a, Element b);

}  // namespace tirs
