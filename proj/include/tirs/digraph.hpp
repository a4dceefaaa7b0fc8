#pragma once

#include "tirs/bits.hpp"
#include "tirs/mdfip.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tirs {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;

/// Finite digraph on vertices 0..v-1 stored as an adjacency matrix together with
/// its transpose. Dual digraphs additionally carry the MDFIP each vertex stands
/// for and a display name such as "ab".
class Digraph {
 public:
  Digraph() = default;
  /// Rows of the arc relation, taken as given (no loops are added).
  explicit Digraph(std::vector<Bits> rows);

  /// Digraph with the given arcs; loops are added at every vertex when `add_loops`.
  static Digraph from_arcs(std::size_t v, std::span<const Arc> arcs, bool add_loops = true);

  std::size_t size() const noexcept { return out_.size(); }
  bool has_arc(Vertex x, Vertex y) const { return out_[x][y]; }
  /// xE
  const Bits& out_set(Vertex x) const { return out_[x]; }
  /// Ex
  const Bits& in_set(Vertex x) const { return in_[x]; }
  const std::vector<Bits>& rows() const noexcept { return out_; }

  bool is_reflexive() const;
  /// All arcs including loops, sorted.
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;

  /// Arc relation reversed; annotations are kept.
  Digraph reversed() const;
  Digraph with_loops() const;
  /// Induced subdigraph on `vertices` (in the given order).
  Digraph induced(const std::vector<Vertex>& vertices) const;

  Digraph with_mdfips(std::vector<Mdfip> mdfips, std::vector<std::string> names) const;
  bool has_mdfips() const noexcept { return !mdfips_.empty(); }
  const std::vector<Mdfip>& mdfips() const noexcept { return mdfips_; }
  /// Display name; the vertex index when no annotation is present.
  std::string name(Vertex x) const;
  std::optional<Vertex> find(const std::string& name) const;

 private:
  std::vector<Bits> out_;
  std::vector<Bits> in_;
  std::vector<Mdfip> mdfips_;
  std::vector<std::string> names_;
};

/// Outcome of a quantified condition. When the condition fails, `witness` holds the
/// lexicographically first counterexample tuple (vertices or elements).
struct Verdict {
  bool holds = true;
  std::vector<std::size_t> witness;

  explicit operator bool() const noexcept { return holds; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<std::size_t> witness) { return {false, std::move(witness)}; }
};

/// Separation, regularity and interpolation, each with its own witness:
/// S and R witnesses are vertex pairs, Ti witnesses are arcs.
struct TirsReport {
  Verdict separation;
  Verdict regularity;
  Verdict interpolation;
  bool holds() const noexcept { return separation.holds && regularity.holds && interpolation.holds; }
};

Bits out_set(const Digraph& g, Vertex x);
Bits in_set(const Digraph& g, Vertex x);

/// Throws NotReflexive when a loop is missing.
TirsReport check_tirs(const Digraph& g);

/// uEv implies some w with wE = uE and Ew inside Ev. Witness: the arc (u, v).
Verdict check_lti(const Digraph& g);
/// uEv implies some w with wE inside uE and Ew = Ev. Witness: the arc (u, v).
Verdict check_uti(const Digraph& g);

/// In-sets pairwise distinct.
Verdict check_djsd(const Digraph& g);
/// Out-sets pairwise distinct.
Verdict check_dmsd(const Digraph& g);
Verdict check_dsd(const Digraph& g);

Verdict is_transitive(const Digraph& g);
/// Reflexive, antisymmetric and transitive.
Verdict is_poset(const Digraph& g);

/// Three-vertex patterns, loops ignored: G0 is the path x->y->z, G1 the single
/// arc x->y beside an isolated z, G2 has no arcs.
enum class Pattern { G0, G1, G2 };

/// Induced copies of `pattern`: one entry per unordered vertex triple, listed in
/// the pattern's role order (x, y, z). Triples are scanned in increasing order.
std::vector<std::array<Vertex, 3>> find_induced(const Digraph& g, Pattern pattern);

/// Neither G0 nor G1 occurs as an induced subdigraph. Witness: the first offending triple.
Verdict check_fis(const Digraph& g);

/// Over distinct x, y, z: xEy, yEz, not yEx, not zEy imply xEz or zEx.
Verdict check_wt0(const Digraph& g);
/// Over distinct x, y, z: xEy, not yEx, not yEz, not zEy imply xEz or zEx.
Verdict check_wt1(const Digraph& g);

/// Arc-preserving bijection in both directions, annotations ignored.
std::optional<std::vector<Vertex>> digraph_isomorphic(const Digraph& lhs, const Digraph& rhs);

std::string canonical_code(const Digraph& g);

}  // namespace tirs
