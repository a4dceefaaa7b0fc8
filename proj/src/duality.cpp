#include "tirs/duality.hpp"

#include "tirs/errors.hpp"

#include <algorithm>
#include <set>

namespace tirs {

std::optional<bool> PartialTwoMap::value(Vertex x) const {
  if (ones[x]) return true;
  if (zeros[x]) return false;
  return std::nullopt;
}

bool preserves_arcs(const Digraph& g, const PartialTwoMap& map) {
  if (map.ones.intersects(map.zeros)) return false;
  for (auto x : members(map.ones))
    if (g.out_set(x).intersects(map.zeros)) return false;
  return true;
}

bool is_maximal_preserving(const Digraph& g, const PartialTwoMap& map) {
  if (!preserves_arcs(g, map)) return false;
  for (Vertex x = 0; x < g.size(); ++x) {
    if (map.value(x)) continue;
    auto as_one = map;
    as_one.ones.set(x);
    if (preserves_arcs(g, as_one)) return false;
    auto as_zero = map;
    as_zero.zeros.set(x);
    if (preserves_arcs(g, as_zero)) return false;
  }
  return true;
}

std::vector<Mdfip> mdfips(const FiniteLattice& lattice) {
  std::vector<Mdfip> out;
  for (auto a : join_irreducibles(lattice))
    for (auto b : meet_irreducibles(lattice)) {
      if (lattice.leq(a, b)) continue;
      if (lattice.covers(b, lattice.join(a, b)) && lattice.covers(lattice.meet(a, b), a)) out.push_back({a, b});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mdfip> mdfips_bruteforce(const FiniteLattice& lattice) {
  const auto n = lattice.size();
  // <up a, down b> and <up c, down d> with up a inside up c and down b inside down d.
  std::vector<Mdfip> out;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (lattice.leq(a, b)) continue;
      bool maximal = true;
      for (Element c = 0; c < n && maximal; ++c)
        for (Element d = 0; d < n && maximal; ++d) {
          if ((c == a && d == b) || !lattice.leq(c, a) || !lattice.leq(b, d)) continue;
          if (!lattice.leq(c, d)) maximal = false;
        }
      if (maximal) out.push_back({a, b});
    }
  return out;
}

Digraph dual_digraph(const FiniteLattice& lattice) {
  auto vertices = mdfips(lattice);
  const auto k = vertices.size();
  std::vector<Bits> rows(k, Bits(k));
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (!lattice.leq(vertices[x].filter, vertices[y].ideal)) rows[x].set(y);
  std::vector<std::string> names;
  for (const auto& m : vertices) {
    const auto& fa = lattice.label(m.filter);
    const auto& ib = lattice.label(m.ideal);
    names.push_back(fa.size() == 1 && ib.size() == 1 ? fa + ib : "(" + fa + "," + ib + ")");
  }
  return Digraph(std::move(rows)).with_mdfips(std::move(vertices), std::move(names));
}

std::vector<Mdfip> maximal_extensions(const FiniteLattice& lattice, Element a, Element b) {
  if (lattice.leq(a, b))
    throw Error(ErrorCode::NotDisjoint,
                "filter of " + std::to_string(a) + " meets ideal of " + std::to_string(b), ElementPair{a, b});
  std::vector<Mdfip> out;
  for (const auto& m : mdfips(lattice))
    if (lattice.leq(m.filter, a) && lattice.leq(b, m.ideal)) out.push_back(m);
  return out;
}

std::vector<PartialTwoMap> mpe_enumerate(const Digraph& g) {
  if (!g.is_reflexive()) throw Error(ErrorCode::NotReflexive, "maximal map enumeration needs loops at every vertex");
  const auto n = g.size();
  auto less = [](const Bits& a, const Bits& b) { return subset_order_less(a, b); };
  std::set<Bits, decltype(less)> ones_sets(less);
  Bits everything(n);
  everything.set();
  ones_sets.insert(everything);
  for (Vertex z = 0; z < n; ++z) {
    const Bits generator = ~g.in_set(z);
    std::vector<Bits> fresh;
    for (const auto& set : ones_sets) fresh.push_back(set & generator);
    ones_sets.insert(fresh.begin(), fresh.end());
  }

  std::vector<PartialTwoMap> out;
  out.reserve(ones_sets.size());
  for (const auto& ones : ones_sets) {
    Bits reached(n);
    for (auto x : members(ones)) reached |= g.out_set(x);
    out.push_back({ones, ~reached});
  }
  return out;
}

FiniteLattice mpe_lattice(const Digraph& g) {
  auto maps = mpe_enumerate(g);
  const auto k = maps.size();
  std::vector<Bits> up(k, Bits(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (maps[i].ones.is_subset_of(maps[j].ones)) up[i].set(j);
    std::string label = "{";
    bool first = true;
    for (auto x : members(maps[i].ones)) {
      if (!first) label += ',';
      label += g.name(x);
      first = false;
    }
    labels.push_back(label + "}");
  }
  return FiniteLattice::from_order(std::move(up), std::move(labels));
}

bool roundtrip_lattice(const FiniteLattice& lattice) {
  return lattice_isomorphic(lattice, mpe_lattice(dual_digraph(lattice))).has_value();
}

bool roundtrip_digraph(const Digraph& g) {
  return digraph_isomorphic(g, dual_digraph(mpe_lattice(g))).has_value();
}

std::vector<Element> t_set(const FiniteLattice& lattice, Element a, Element b) {
  std::vector<Element> out;
  for (auto m : meet_irreducibles(lattice))
    if (lattice.leq(b, m) && !lattice.leq(a, m)) out.push_back(m);
  return out;
}

}  // namespace tirs
