#include "tirs/digraph.hpp"

#include "tirs/canonical.hpp"
#include "tirs/errors.hpp"

#include <algorithm>

namespace tirs {

Digraph::Digraph(std::vector<Bits> rows) : out_(std::move(rows)) {
  const auto n = out_.size();
  for (const auto& row : out_)
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "adjacency matrix is not square");
  in_ = transpose(out_);
}

Digraph Digraph::from_arcs(std::size_t v, std::span<const Arc> arcs, bool add_loops) {
  std::vector<Bits> rows(v, Bits(v));
  for (auto [x, y] : arcs) {
    if (x >= v || y >= v)
      throw Error(ErrorCode::InvalidInput,
                  "arc (" + std::to_string(x) + ", " + std::to_string(y) + ") is out of range", Arc{x, y});
    rows[x].set(y);
  }
  if (add_loops)
    for (Vertex x = 0; x < v; ++x) rows[x].set(x);
  return Digraph(std::move(rows));
}

bool Digraph::is_reflexive() const {
  for (Vertex x = 0; x < size(); ++x)
    if (!out_[x][x]) return false;
  return true;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex x = 0; x < size(); ++x)
    for (auto y : members(out_[x])) out.emplace_back(x, y);
  return out;
}

std::size_t Digraph::arc_count() const {
  std::size_t count = 0;
  for (const auto& row : out_) count += row.count();
  return count;
}

Digraph Digraph::reversed() const {
  Digraph g(in_);
  g.mdfips_ = mdfips_;
  g.names_ = names_;
  return g;
}

Digraph Digraph::with_loops() const {
  auto rows = out_;
  for (Vertex x = 0; x < size(); ++x) rows[x].set(x);
  Digraph g(std::move(rows));
  g.mdfips_ = mdfips_;
  g.names_ = names_;
  return g;
}

Digraph Digraph::induced(const std::vector<Vertex>& vertices) const {
  const auto k = vertices.size();
  std::vector<Bits> rows(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (out_[vertices[i]][vertices[j]]) rows[i].set(j);
  Digraph g(std::move(rows));
  if (has_mdfips()) {
    for (auto x : vertices) {
      g.mdfips_.push_back(mdfips_[x]);
      g.names_.push_back(names_[x]);
    }
  }
  return g;
}

Digraph Digraph::with_mdfips(std::vector<Mdfip> mdfips, std::vector<std::string> names) const {
  if (mdfips.size() != size() || names.size() != size())
    throw Error(ErrorCode::InvalidInput, "vertex annotation count does not match vertex count");
  Digraph g = *this;
  g.mdfips_ = std::move(mdfips);
  g.names_ = std::move(names);
  return g;
}

std::string Digraph::name(Vertex x) const {
  if (x < names_.size()) return names_[x];
  return std::to_string(x);
}

std::optional<Vertex> Digraph::find(const std::string& wanted) const {
  for (Vertex x = 0; x < size(); ++x)
    if (name(x) == wanted) return x;
  return std::nullopt;
}

Bits out_set(const Digraph& g, Vertex x) { return g.out_set(x); }
Bits in_set(const Digraph& g, Vertex x) { return g.in_set(x); }

namespace {

bool proper_subset(const Bits& a, const Bits& b) { return a != b && a.is_subset_of(b); }

}  // namespace

TirsReport check_tirs(const Digraph& g) {
  const auto n = g.size();
  for (Vertex x = 0; x < n; ++x)
    if (!g.has_arc(x, x)) throw Error(ErrorCode::NotReflexive, "vertex " + std::to_string(x) + " has no loop", Arc{x, x});

  TirsReport report;
  for (Vertex x = 0; x < n && report.separation.holds; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (g.out_set(x) == g.out_set(y) && g.in_set(x) == g.in_set(y)) {
        report.separation = Verdict::fail({x, y});
        break;
      }

  for (Vertex x = 0; x < n && report.regularity.holds; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (!g.has_arc(x, y)) continue;
      if (proper_subset(g.out_set(x), g.out_set(y)) || proper_subset(g.in_set(y), g.in_set(x))) {
        report.regularity = Verdict::fail({x, y});
        break;
      }
    }

  for (Vertex x = 0; x < n && report.interpolation.holds; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (!g.has_arc(x, y)) continue;
      bool found = false;
      for (Vertex z = 0; z < n && !found; ++z)
        found = g.out_set(z).is_subset_of(g.out_set(x)) && g.in_set(z).is_subset_of(g.in_set(y));
      if (!found) {
        report.interpolation = Verdict::fail({x, y});
        break;
      }
    }
  return report;
}

Verdict check_lti(const Digraph& g) {
  const auto n = g.size();
  for (Vertex u = 0; u < n; ++u)
    for (auto v : members(g.out_set(u))) {
      bool found = false;
      for (Vertex w = 0; w < n && !found; ++w)
        found = g.out_set(w) == g.out_set(u) && g.in_set(w).is_subset_of(g.in_set(v));
      if (!found) return Verdict::fail({u, v});
    }
  return Verdict::pass();
}

Verdict check_uti(const Digraph& g) {
  const auto n = g.size();
  for (Vertex u = 0; u < n; ++u)
    for (auto v : members(g.out_set(u))) {
      bool found = false;
      for (Vertex w = 0; w < n && !found; ++w)
        found = g.out_set(w).is_subset_of(g.out_set(u)) && g.in_set(w) == g.in_set(v);
      if (!found) return Verdict::fail({u, v});
    }
  return Verdict::pass();
}

namespace {

Verdict distinct_sets(const Digraph& g, bool incoming) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      const auto& a = incoming ? g.in_set(u) : g.out_set(u);
      const auto& b = incoming ? g.in_set(v) : g.out_set(v);
      if (a == b) return Verdict::fail({u, v});
    }
  return Verdict::pass();
}

}  // namespace

Verdict check_djsd(const Digraph& g) { return distinct_sets(g, true); }
Verdict check_dmsd(const Digraph& g) { return distinct_sets(g, false); }

Verdict check_dsd(const Digraph& g) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      if (g.in_set(u) == g.in_set(v) || g.out_set(u) == g.out_set(v)) return Verdict::fail({u, v});
  return Verdict::pass();
}

Verdict is_transitive(const Digraph& g) {
  for (Vertex x = 0; x < g.size(); ++x)
    for (auto y : members(g.out_set(x)))
      for (auto z : members(g.out_set(y)))
        if (!g.has_arc(x, z)) return Verdict::fail({x, y, z});
  return Verdict::pass();
}

Verdict is_poset(const Digraph& g) {
  for (Vertex x = 0; x < g.size(); ++x)
    if (!g.has_arc(x, x)) return Verdict::fail({x});
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = x + 1; y < g.size(); ++y)
      if (g.has_arc(x, y) && g.has_arc(y, x)) return Verdict::fail({x, y});
  return is_transitive(g);
}

namespace {

bool pattern_arc(Pattern pattern, int from, int to) {
  // Roles: 0 = x, 1 = y, 2 = z.
  switch (pattern) {
    case Pattern::G0: return (from == 0 && to == 1) || (from == 1 && to == 2);
    case Pattern::G1: return from == 0 && to == 1;
    case Pattern::G2: return false;
  }
  return false;
}

std::optional<std::array<Vertex, 3>> match(const Digraph& g, std::array<Vertex, 3> triple, Pattern pattern) {
  std::array<int, 3> roles{0, 1, 2};
  do {
    std::array<Vertex, 3> placed{triple[roles[0]], triple[roles[1]], triple[roles[2]]};
    bool ok = true;
    for (int p = 0; p < 3 && ok; ++p)
      for (int q = 0; q < 3 && ok; ++q)
        if (p != q) ok = g.has_arc(placed[p], placed[q]) == pattern_arc(pattern, p, q);
    if (ok) return placed;
  } while (std::next_permutation(roles.begin(), roles.end()));
  return std::nullopt;
}

}  // namespace

std::vector<std::array<Vertex, 3>> find_induced(const Digraph& g, Pattern pattern) {
  std::vector<std::array<Vertex, 3>> out;
  const auto n = g.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (auto placed = match(g, {a, b, c}, pattern)) out.push_back(*placed);
  return out;
}

Verdict check_fis(const Digraph& g) {
  const auto n = g.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        if (auto placed = match(g, {a, b, c}, Pattern::G0)) return Verdict::fail({(*placed)[0], (*placed)[1], (*placed)[2]});
        if (auto placed = match(g, {a, b, c}, Pattern::G1)) return Verdict::fail({(*placed)[0], (*placed)[1], (*placed)[2]});
      }
  return Verdict::pass();
}

Verdict check_wt0(const Digraph& g) {
  const auto n = g.size();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (g.has_arc(x, y) && g.has_arc(y, z) && !g.has_arc(y, x) && !g.has_arc(z, y) && !g.has_arc(x, z) &&
            !g.has_arc(z, x))
          return Verdict::fail({x, y, z});
      }
  return Verdict::pass();
}

Verdict check_wt1(const Digraph& g) {
  const auto n = g.size();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (g.has_arc(x, y) && !g.has_arc(y, x) && !g.has_arc(y, z) && !g.has_arc(z, y) && !g.has_arc(x, z) &&
            !g.has_arc(z, x))
          return Verdict::fail({x, y, z});
      }
  return Verdict::pass();
}

std::string canonical_code(const Digraph& g) { return canonical_form(g.rows()).code; }

std::optional<std::vector<Vertex>> digraph_isomorphic(const Digraph& lhs, const Digraph& rhs) {
  if (lhs.size() != rhs.size() || lhs.arc_count() != rhs.arc_count()) return std::nullopt;
  auto left = canonical_form(lhs.rows());
  auto right = canonical_form(rhs.rows());
  if (left.code != right.code) return std::nullopt;
  std::vector<Vertex> witness(lhs.size());
  for (std::size_t pos = 0; pos < lhs.size(); ++pos) witness[left.order[pos]] = right.order[pos];
  return witness;
}

}  // namespace tirs
