#pragma once

#include "tirs/convex_geometry.hpp"
#include "tirs/digraph.hpp"
#include "tirs/lattice.hpp"

#include <json.hpp>

#include <string>

namespace tirs {

// JSON shapes:
//   lattice        {"n": 5, "covers": [[0,1], ...], "labels": {"1": "a", ...}}
//   digraph        {"v": 3, "arcs": [[0,0], [0,1], ...], "mdfips": [[1,2], ...]}
//   closure system {"ground": 3, "closed": [[], [0], [0,1,2]]}
// Malformed input raises Error(InvalidInput).

/// Covers sorted lexicographically; labels only for elements whose label is not
/// their index.
nlohmann::json lattice_to_json(const FiniteLattice& lattice);
FiniteLattice lattice_from_json(const nlohmann::json& json);

struct LoadedDigraph {
  Digraph graph;
  /// Some vertex had no loop in the input; loops were added.
  bool loops_added = false;
};

/// Loops are always written explicitly; "mdfips" and "names" only for dual digraphs.
nlohmann::json digraph_to_json(const Digraph& g);
LoadedDigraph digraph_from_json(const nlohmann::json& json);

nlohmann::json closure_system_to_json(const ClosureSystem& system);
ClosureSystem closure_system_from_json(const nlohmann::json& json);

bool looks_like_lattice(const nlohmann::json& json);
bool looks_like_digraph(const nlohmann::json& json);

/// Loops suppressed; a pair of opposite arcs becomes one edge with dir=both.
std::string digraph_to_dot(const Digraph& g);
/// Hasse diagram, bottom at the bottom.
std::string lattice_to_dot(const FiniteLattice& lattice);

nlohmann::json read_json_file(const std::string& path);

}  // namespace tirs
