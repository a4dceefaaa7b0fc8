#pragma once

#include "tirs/bits.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tirs {

using Element = std::size_t;
using ElementPair = std::pair<Element, Element>;

/// A finite lattice on the carrier 0..n-1.
///
/// Validity is checked eagerly: a FiniteLattice value always has a partial order
/// in which every pair has a meet and a join. Order, meet and join are stored as
/// dense tables so every primitive is a lookup. Values are immutable.
class FiniteLattice {
 public:
  /// Lattice whose order is the reflexive-transitive closure of `covers`.
  /// Throws NotAPartialOrder on a cycle and NotALattice when some pair lacks a
  /// meet or join; both errors carry the offending pair.
  static FiniteLattice from_covers(std::size_t n, std::span<const ElementPair> covers,
                                   std::vector<std::string> labels = {});

  /// `up[a][b]` is true iff a <= b. Must already be a partial order.
  static FiniteLattice from_order(std::vector<Bits> up, std::vector<std::string> labels = {});

  /// Same as from_order but returns nullopt instead of throwing.
  static std::optional<FiniteLattice> try_from_order(std::vector<Bits> up,
                                                     std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }

  bool leq(Element a, Element b) const { return up_[a][b]; }
  bool less(Element a, Element b) const { return a != b && up_[a][b]; }
  bool comparable(Element a, Element b) const { return up_[a][b] || up_[b][a]; }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  /// a is covered by b.
  bool covers(Element a, Element b) const { return cover_[a][b]; }

  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  /// The principal filter of a (rows of the order matrix).
  const Bits& up_set(Element a) const { return up_[a]; }
  /// The principal ideal of a.
  const Bits& down_set(Element a) const { return down_[a]; }
  const std::vector<Bits>& order_matrix() const noexcept { return up_; }

  const std::vector<Element>& lower_covers(Element a) const { return lower_[a]; }
  const std::vector<Element>& upper_covers(Element a) const { return upper_[a]; }
  /// All pairs (a, b) with a covered by b, sorted lexicographically.
  std::vector<ElementPair> cover_pairs() const;

  bool is_join_irreducible(Element a) const { return lower_[a].size() == 1; }
  bool is_meet_irreducible(Element a) const { return upper_[a].size() == 1; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }
  /// Element carrying `name`, if any.
  std::optional<Element> find(const std::string& name) const;

  /// Copy with element i of the result being element order[i] of this lattice.
  FiniteLattice relabeled(const std::vector<Element>& order) const;

 private:
  FiniteLattice() = default;

  std::size_t n_ = 0;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<Bits> cover_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::vector<Element>> upper_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::string> labels_;

  friend struct LatticeBuilder;
};

/// J(L): elements with exactly one lower cover, ascending.
std::vector<Element> join_irreducibles(const FiniteLattice& lattice);
/// M(L): elements with exactly one upper cover, ascending.
std::vector<Element> meet_irreducibles(const FiniteLattice& lattice);

/// Meet of the lower covers of `a`. Throws NoLowerCovers for the bottom.
Element mu(const FiniteLattice& lattice, Element a);

/// The sublattice [lo, hi], re-indexed in increasing original index.
/// Throws EmptyInterval when lo is not below hi.
FiniteLattice interval(const FiniteLattice& lattice, Element lo, Element hi);

FiniteLattice order_dual(const FiniteLattice& lattice);

/// Witness bijection (element i of `lhs` maps to witness[i] of `rhs`) when the
/// lattices are isomorphic.
std::optional<std::vector<Element>> lattice_isomorphic(const FiniteLattice& lhs, const FiniteLattice& rhs);

/// Canonical code of the order; equal codes iff isomorphic lattices.
std::string canonical_code(const FiniteLattice& lattice);

/// Five elements forming a sublattice isomorphic to N5:
/// bottom < side < top and bottom < low < high < top, with side incomparable to low and high.
struct N5Sublattice {
  Element bottom;
  Element side;
  Element low;
  Element high;
  Element top;
  bool operator==(const N5Sublattice&) const = default;
};

/// Every N5 sublattice, each reported once, sorted by (side, low, high).
std::vector<N5Sublattice> find_n5_sublattices(const FiniteLattice& lattice);

}  // namespace tirs
