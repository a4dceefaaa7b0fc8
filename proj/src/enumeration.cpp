#include "tirs/enumeration.hpp"

#include "tirs/canonical.hpp"
#include "tirs/errors.hpp"
#include "tirs/io.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>

namespace tirs {
namespace {

using CodedLattices = std::map<std::string, FiniteLattice>;

FiniteLattice canonical_relabel(const FiniteLattice& lattice, const CanonicalForm& form) {
  auto relabeled = lattice.relabeled(form.order);
  // Labels are positional in the catalog.
  std::vector<Bits> up = relabeled.order_matrix();
  return FiniteLattice::from_order(std::move(up));
}

void extend(const FiniteLattice& base, CodedLattices& next) {
  const auto n = base.size();
  for (Element p = 0; p < n; ++p) {
    auto strictly_above = base.up_set(p);
    strictly_above.reset(p);
    const auto candidates = members(strictly_above);
    const std::uint64_t choices = std::uint64_t{1} << candidates.size();
    for (std::uint64_t pick = 0; pick < choices; ++pick) {
      Bits above(n);
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (pick >> i & 1) above.set(candidates[i]);
      bool up_closed = true;
      for (auto u : members(above))
        if (!base.up_set(u).is_subset_of(above)) {
          up_closed = false;
          break;
        }
      if (!up_closed) continue;

      // New element j = n: below it the ideal of p, above it `above`.
      std::vector<Bits> up(n + 1, Bits(n + 1));
      for (Element x = 0; x < n; ++x) {
        for (auto y : members(base.up_set(x))) up[x].set(y);
        if (base.leq(x, p)) up[x].set(n);
      }
      up[n].set(n);
      for (auto u : members(above)) up[n].set(u);
      auto candidate = FiniteLattice::try_from_order(std::move(up));
      if (!candidate) continue;
      auto form = canonical_form(candidate->order_matrix());
      if (next.count(form.code)) continue;
      next.emplace(form.code, canonical_relabel(*candidate, form));
    }
  }
}

}  // namespace

std::vector<std::size_t> LatticeCatalog::count_by_size() const {
  std::vector<std::size_t> counts(max_n + 1, 0);
  for (const auto& entry : entries) ++counts[entry.size()];
  return counts;
}

LatticeCatalog enumerate_lattices(std::size_t max_n) {
  if (max_n < 1 || max_n > 8)
    throw Error(ErrorCode::BoundTooLarge, "lattice enumeration supports 1 <= max_n <= 8, got " + std::to_string(max_n));
  LatticeCatalog catalog;
  catalog.max_n = max_n;
  CodedLattices level;
  auto single = FiniteLattice::from_covers(1, {});
  level.emplace(canonical_code(single), single);
  for (std::size_t n = 1;; ++n) {
    for (auto& [code, lattice] : level) catalog.entries.push_back(lattice);
    if (n == max_n) break;
    CodedLattices next;
    for (auto& [code, lattice] : level) extend(lattice, next);
    level = std::move(next);
  }
  return catalog;
}

std::vector<Digraph> all_reflexive_digraphs(std::size_t v) {
  if (v < 1 || v > 5) throw Error(ErrorCode::BoundTooLarge, "reflexive digraphs are listed for 1 <= v <= 5");
  std::vector<Arc> slots;
  for (Vertex x = 0; x < v; ++x)
    for (Vertex y = 0; y < v; ++y)
      if (x != y) slots.emplace_back(x, y);
  std::vector<Digraph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Bits> rows(v, Bits(v));
    for (Vertex x = 0; x < v; ++x) rows[x].set(x);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) rows[slots[i].first].set(slots[i].second);
    out.emplace_back(std::move(rows));
  }
  return out;
}

std::vector<Digraph> enumerate_tirs_digraphs(std::size_t max_v) {
  if (max_v < 1 || max_v > 5)
    throw Error(ErrorCode::BoundTooLarge, "TiRS enumeration supports 1 <= max_v <= 5, got " + std::to_string(max_v));
  std::vector<Digraph> out;
  for (std::size_t v = 1; v <= max_v; ++v) {
    std::map<std::string, Digraph> classes;
    std::vector<Arc> slots;
    for (Vertex x = 0; x < v; ++x)
      for (Vertex y = 0; y < v; ++y)
        if (x != y) slots.emplace_back(x, y);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<Bits> rows(v, Bits(v));
      for (Vertex x = 0; x < v; ++x) rows[x].set(x);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) rows[slots[i].first].set(slots[i].second);
      Digraph g(std::move(rows));
      if (!check_tirs(g).holds()) continue;
      auto form = canonical_form(g.rows());
      if (classes.count(form.code)) continue;
      std::vector<Bits> canonical(v, Bits(v));
      for (Vertex i = 0; i < v; ++i)
        for (Vertex j = 0; j < v; ++j)
          if (g.has_arc(form.order[i], form.order[j])) canonical[i].set(j);
      classes.emplace(form.code, Digraph(std::move(canonical)));
    }
    for (auto& [code, g] : classes) out.push_back(std::move(g));
  }
  return out;
}

void write_catalog(std::ostream& out, const LatticeCatalog& catalog) {
  for (const auto& entry : catalog.entries) out << lattice_to_json(entry).dump() << '\n';
}

LatticeCatalog read_catalog(std::istream& in, std::size_t max_n) {
  LatticeCatalog catalog;
  catalog.max_n = max_n;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("malformed catalog record: ") + e.what());
    }
    auto lattice = lattice_from_json(record);
    if (lattice.size() > max_n) throw Error(ErrorCode::InvalidInput, "catalog record exceeds max_n");
    catalog.entries.push_back(std::move(lattice));
  }
  return catalog;
}

std::string catalog_cache_name(std::size_t max_n) {
  return "lattice-catalog-n" + std::to_string(max_n) + "-g" + std::to_string(kCatalogGeneratorVersion) + ".ndjson";
}

LatticeCatalog load_or_build_catalog(std::size_t max_n, const std::string& directory) {
  const auto path = std::filesystem::path(directory) / catalog_cache_name(max_n);
  if (std::ifstream cached{path}) return read_catalog(cached, max_n);
  auto catalog = enumerate_lattices(max_n);
  std::filesystem::create_directories(directory);
  std::ofstream out{path};
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write catalog cache " + path.string());
  write_catalog(out, catalog);
  return catalog;
}

}  // namespace tirs
