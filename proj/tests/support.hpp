#pragma once

#include "tirs/digraph.hpp"
#include "tirs/lattice.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace support {

inline tirs::Element el(const tirs::FiniteLattice& l, const std::string& name) { return l.find(name).value(); }

inline tirs::Vertex vx(const tirs::Digraph& g, const std::string& name) { return g.find(name).value(); }

inline std::set<std::string> vertex_names(const tirs::Digraph& g) {
  std::set<std::string> out;
  for (tirs::Vertex x = 0; x < g.size(); ++x) out.insert(g.name(x));
  return out;
}

using NamedArcs = std::set<std::pair<std::string, std::string>>;

inline NamedArcs non_loop_arcs(const tirs::Digraph& g) {
  NamedArcs out;
  for (auto [x, y] : g.arcs())
    if (x != y) out.emplace(g.name(x), g.name(y));
  return out;
}

/// "x<->y" adds both directions.
inline NamedArcs arcs(std::initializer_list<std::string> specs) {
  NamedArcs out;
  for (const auto& s : specs) {
    if (auto p = s.find("<->"); p != std::string::npos) {
      out.emplace(s.substr(0, p), s.substr(p + 3));
      out.emplace(s.substr(p + 3), s.substr(0, p));
    } else {
      p = s.find("->");
      out.emplace(s.substr(0, p), s.substr(p + 2));
    }
  }
  return out;
}

inline std::vector<tirs::ElementPair> pairs(std::initializer_list<tirs::ElementPair> list) { return list; }

/// Digraph with loops plus the given arcs.
inline tirs::Digraph digraph(std::size_t v, std::initializer_list<tirs::Arc> list) {
  std::vector<tirs::Arc> a(list);
  return tirs::Digraph::from_arcs(v, a);
}

}  // namespace support
