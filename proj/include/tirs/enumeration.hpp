#pragma once

#include "tirs/digraph.hpp"
#include "tirs/lattice.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tirs {

/// Bumped whenever the generator or the canonical labeling changes; part of the cache key.
inline constexpr int kCatalogGeneratorVersion = 1;

/// All lattices with at most `max_n` elements, one per isomorphism class. Each
/// entry is relabeled into its canonical order; entries are sorted by (size,
/// canonical code).
struct LatticeCatalog {
  std::size_t max_n = 0;
  std::vector<FiniteLattice> entries;

  /// counts[k] = number of entries with k elements, for k = 0..max_n.
  std::vector<std::size_t> count_by_size() const;
};

/// 1 <= max_n <= 8, otherwise BoundTooLarge.
///
/// Every lattice with n + 1 >= 2 elements arises from an n-element lattice by
/// inserting one join-irreducible element j: removing j leaves a join-closed
/// subset holding the bottom, which is again a lattice. So level n + 1 is
/// generated from level n by choosing the lower cover p of j and the up-set U of
/// elements strictly above p that sit above j, keeping the candidates that are
/// lattices and deduplicating by canonical code.
LatticeCatalog enumerate_lattices(std::size_t max_n);

/// Reflexive digraphs on 1..max_v vertices satisfying S, R and Ti, one per
/// isomorphism class, sorted by (size, canonical code). 1 <= max_v <= 5.
std::vector<Digraph> enumerate_tirs_digraphs(std::size_t max_v);

/// Every labelled reflexive digraph on exactly v vertices (2^(v(v-1)) of them).
/// 1 <= v <= 5.
std::vector<Digraph> all_reflexive_digraphs(std::size_t v);

/// One JSON lattice record per line.
void write_catalog(std::ostream& out, const LatticeCatalog& catalog);
LatticeCatalog read_catalog(std::istream& in, std::size_t max_n);

/// "lattice-catalog-n<max_n>-g<version>.ndjson"
std::string catalog_cache_name(std::size_t max_n);

/// Reads the cache file for max_n from `directory` when present, otherwise
/// enumerates and writes it there.
LatticeCatalog load_or_build_catalog(std::size_t max_n, const std::string& directory);

}  // namespace tirs
