#include "tirs/io.hpp"

#include "tirs/errors.hpp"

#include <fstream>
#include <sstream>

namespace tirs {
namespace {

using nlohmann::json;

std::size_t require_count(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned())
    throw Error(ErrorCode::InvalidInput, std::string("expected a non-negative integer field \"") + key + "\"");
  return j.at(key).get<std::size_t>();
}

std::vector<std::pair<std::size_t, std::size_t>> require_pairs(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorCode::InvalidInput, std::string("expected an array field \"") + key + "\"");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& item : j.at(key)) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
      throw Error(ErrorCode::InvalidInput, std::string("entries of \"") + key + "\" must be pairs of indices");
    out.emplace_back(item[0].get<std::size_t>(), item[1].get<std::size_t>());
  }
  return out;
}

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json lattice_to_json(const FiniteLattice& lattice) {
  json out;
  out["n"] = lattice.size();
  json covers = json::array();
  for (auto [a, b] : lattice.cover_pairs()) covers.push_back({a, b});
  out["covers"] = std::move(covers);
  json labels = json::object();
  for (Element a = 0; a < lattice.size(); ++a)
    if (lattice.label(a) != std::to_string(a)) labels[std::to_string(a)] = lattice.label(a);
  if (!labels.empty()) out["labels"] = std::move(labels);
  return out;
}

FiniteLattice lattice_from_json(const json& j) {
  const auto n = require_count(j, "n");
  const auto covers = require_pairs(j, "covers");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& given = j.at("labels");
    if (!given.is_object()) throw Error(ErrorCode::InvalidInput, "\"labels\" must be an object");
    labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) labels[a] = std::to_string(a);
    for (const auto& [key, value] : given.items()) {
      std::size_t a = 0;
      try {
        a = std::stoul(key);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidInput, "label key \"" + key + "\" is not an element index");
      }
      if (a >= n || !value.is_string()) throw Error(ErrorCode::InvalidInput, "bad label for \"" + key + "\"");
      labels[a] = value.get<std::string>();
    }
  }
  return FiniteLattice::from_covers(n, covers, std::move(labels));
}

json digraph_to_json(const Digraph& g) {
  json out;
  out["v"] = g.size();
  json arcs = json::array();
  for (auto [x, y] : g.arcs()) arcs.push_back({x, y});
  out["arcs"] = std::move(arcs);
  if (g.has_mdfips()) {
    json pairs = json::array();
    json names = json::array();
    for (Vertex x = 0; x < g.size(); ++x) {
      pairs.push_back({g.mdfips()[x].filter, g.mdfips()[x].ideal});
      names.push_back(g.name(x));
    }
    out["mdfips"] = std::move(pairs);
    out["names"] = std::move(names);
  }
  return out;
}

LoadedDigraph digraph_from_json(const json& j) {
  const auto v = require_count(j, "v");
  const auto arcs = require_pairs(j, "arcs");
  auto raw = Digraph::from_arcs(v, arcs, false);
  LoadedDigraph loaded{raw.with_loops(), !raw.is_reflexive()};
  if (j.contains("mdfips")) {
    const auto pairs = require_pairs(j, "mdfips");
    if (pairs.size() != v) throw Error(ErrorCode::InvalidInput, "\"mdfips\" must annotate every vertex");
    std::vector<Mdfip> mdfips;
    std::vector<std::string> names;
    for (auto [a, b] : pairs) {
      mdfips.push_back({a, b});
      names.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (j.contains("names")) {
      const auto& given = j.at("names");
      if (!given.is_array() || given.size() != v) throw Error(ErrorCode::InvalidInput, "\"names\" must name every vertex");
      for (std::size_t x = 0; x < v; ++x) {
        if (!given[x].is_string()) throw Error(ErrorCode::InvalidInput, "vertex names must be strings");
        names[x] = given[x].get<std::string>();
      }
    }
    loaded.graph = loaded.graph.with_mdfips(std::move(mdfips), std::move(names));
  }
  return loaded;
}

json closure_system_to_json(const ClosureSystem& system) {
  json out;
  out["ground"] = system.ground_size();
  json closed = json::array();
  for (const auto& set : system.closed_sets()) closed.push_back(members(set));
  out["closed"] = std::move(closed);
  return out;
}

ClosureSystem closure_system_from_json(const json& j) {
  const auto ground = require_count(j, "ground");
  if (!j.contains("closed") || !j.at("closed").is_array())
    throw Error(ErrorCode::InvalidInput, "expected an array field \"closed\"");
  std::vector<Bits> closed;
  for (const auto& set : j.at("closed")) {
    if (!set.is_array()) throw Error(ErrorCode::InvalidInput, "closed sets must be arrays");
    Bits bits(ground);
    for (const auto& x : set) {
      if (!x.is_number_unsigned() || x.get<std::size_t>() >= ground)
        throw Error(ErrorCode::InvalidInput, "closed set member out of range");
      bits.set(x.get<std::size_t>());
    }
    closed.push_back(std::move(bits));
  }
  return ClosureSystem(ground, std::move(closed));
}

bool looks_like_lattice(const json& j) { return j.is_object() && j.contains("n") && j.contains("covers"); }
bool looks_like_digraph(const json& j) { return j.is_object() && j.contains("v") && j.contains("arcs"); }

std::string digraph_to_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex x = 0; x < g.size(); ++x) out << "  " << x << " [label=" << quoted(g.name(x)) << "];\n";
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < g.size(); ++y) {
      if (x == y || !g.has_arc(x, y)) continue;
      if (g.has_arc(y, x)) {
        if (x < y) out << "  " << x << " -> " << y << " [dir=both];\n";
      } else {
        out << "  " << x << " -> " << y << ";\n";
      }
    }
  out << "}\n";
  return out.str();
}

std::string lattice_to_dot(const FiniteLattice& lattice) {
  std::ostringstream out;
  out << "graph L {\n  rankdir=BT;\n";
  for (Element a = 0; a < lattice.size(); ++a) out << "  " << a << " [label=" << quoted(lattice.label(a)) << "];\n";
  for (auto [a, b] : lattice.cover_pairs()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace tirs
