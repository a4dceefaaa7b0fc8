#include "tirs/convex_geometry.hpp"

#include "tirs/errors.hpp"
#include "tirs/properties.hpp"

#include <algorithm>
#include <cstdint>

namespace tirs {

ClosureSystem::ClosureSystem(std::size_t ground, std::vector<Bits> closed, std::vector<std::string> labels)
    : ground_(ground), closed_(std::move(closed)), labels_(std::move(labels)) {
  if (labels_.empty())
    for (std::size_t x = 0; x < ground_; ++x) labels_.push_back(std::to_string(x));
  if (labels_.size() != ground_) throw Error(ErrorCode::InvalidClosureSystem, "label count does not match ground size");
  for (const auto& set : closed_)
    if (set.size() != ground_) throw Error(ErrorCode::InvalidClosureSystem, "closed set over the wrong ground size");
  std::sort(closed_.begin(), closed_.end(), subset_order_less);
  closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());

  Bits everything(ground_);
  everything.set();
  if (!is_closed(everything)) throw Error(ErrorCode::InvalidClosureSystem, "the ground set must be closed");
  for (std::size_t i = 0; i < closed_.size(); ++i)
    for (std::size_t j = i + 1; j < closed_.size(); ++j)
      if (!is_closed(closed_[i] & closed_[j]))
        throw Error(ErrorCode::InvalidClosureSystem,
                    "intersection of " + format_set(closed_[i]) + " and " + format_set(closed_[j]) + " is not closed",
                    std::pair<std::size_t, std::size_t>{i, j});
}

bool ClosureSystem::is_closed(const Bits& set) const {
  return std::find(closed_.begin(), closed_.end(), set) != closed_.end();
}

Bits ClosureSystem::closure_of(const Bits& set) const {
  if (set.size() != ground_) throw Error(ErrorCode::InvalidInput, "subset over the wrong ground size");
  Bits out(ground_);
  out.set();
  for (const auto& closed : closed_)
    if (set.is_subset_of(closed)) out &= closed;
  return out;
}

Bits closure_of(const ClosureSystem& system, const Bits& set) { return system.closure_of(set); }

bool is_zero_closure(const ClosureSystem& system) { return system.is_closed(Bits(system.ground_size())); }

Verdict satisfies_aep(const ClosureSystem& system) {
  const auto& closed = system.closed_sets();
  const auto k = system.ground_size();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const auto& a = closed[i];
    for (std::size_t x = 0; x < k; ++x) {
      if (a[x]) continue;
      auto with_x = a;
      with_x.set(x);
      const auto closure_x = system.closure_of(with_x);
      for (std::size_t y = 0; y < k; ++y) {
        if (y == x || a[y]) continue;
        auto with_y = a;
        with_y.set(y);
        if (system.closure_of(with_y)[x] && closure_x[y]) return Verdict::fail({i, x, y});
      }
    }
  }
  return Verdict::pass();
}

FiniteLattice cld_lattice(const ClosureSystem& system) {
  const auto& closed = system.closed_sets();
  const auto n = closed.size();
  std::vector<Bits> up(n, Bits(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (closed[i].is_subset_of(closed[j])) up[i].set(j);
    std::string label = "{";
    bool first = true;
    for (auto x : members(closed[i])) {
      if (!first) label += ',';
      label += system.ground_labels()[x];
      first = false;
    }
    labels.push_back(label + "}");
  }
  return FiniteLattice::from_order(std::move(up), std::move(labels));
}

ClosureSystem join_irreducible_closure_system(const FiniteLattice& lattice) {
  const auto js = join_irreducibles(lattice);
  std::vector<Bits> closed;
  for (Element x = 0; x < lattice.size(); ++x) {
    Bits below(js.size());
    for (std::size_t i = 0; i < js.size(); ++i)
      if (lattice.leq(js[i], x)) below.set(i);
    closed.push_back(std::move(below));
  }
  std::vector<std::string> labels;
  for (auto j : js) labels.push_back(lattice.label(j));
  return ClosureSystem(js.size(), std::move(closed), std::move(labels));
}

ClosureSystem lattice_to_convex_geometry(const FiniteLattice& lattice) {
  auto md = is_meet_distributive(lattice);
  if (!md)
    throw Error(ErrorCode::NotMeetDistributive,
                "interval below element " + std::to_string(md.witness.front()) + " is not distributive");
  return join_irreducible_closure_system(lattice);
}

std::vector<ClosureSystem> enumerate_convex_geometries(std::size_t max_ground) {
  if (max_ground > 4) throw Error(ErrorCode::BoundTooLarge, "convex geometries are enumerated for ground sets up to 4");
  std::vector<ClosureSystem> out;
  for (std::size_t k = 0; k <= max_ground; ++k) {
    const std::size_t subsets = std::size_t{1} << k;
    const std::size_t full = subsets - 1;
    // Families always hold the empty set and the ground set; the remaining subsets are free.
    std::vector<std::size_t> free_subsets;
    for (std::size_t s = 1; s < full; ++s) free_subsets.push_back(s);
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free_subsets.size()); ++pick) {
      std::vector<bool> member(subsets, false);
      member[0] = member[full] = true;
      for (std::size_t i = 0; i < free_subsets.size(); ++i)
        if (pick >> i & 1) member[free_subsets[i]] = true;
      bool closed_under_meet = true;
      for (std::size_t s = 0; s < subsets && closed_under_meet; ++s)
        for (std::size_t t = s + 1; t < subsets && closed_under_meet; ++t)
          if (member[s] && member[t] && !member[s & t]) closed_under_meet = false;
      if (!closed_under_meet) continue;
      std::vector<Bits> closed;
      for (std::size_t s = 0; s < subsets; ++s)
        if (member[s]) closed.emplace_back(k, s);
      ClosureSystem system(k, std::move(closed));
      if (satisfies_aep(system)) out.push_back(std::move(system));
    }
  }
  return out;
}

}  // namespace tirs
