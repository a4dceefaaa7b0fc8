#include "tirs/lattice.hpp"

#include "tirs/canonical.hpp"
#include "tirs/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tirs {

struct BuildFailure {
  ErrorCode code;
  std::string message;
  std::optional<ElementPair> pair;
};

struct LatticeBuilder {
  static std::optional<FiniteLattice> build(std::vector<Bits> up, std::vector<std::string> labels,
                                            BuildFailure* failure);
};

namespace {

std::string pair_text(ElementPair p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

// Greatest element of `candidates` that lies above all of them, if any.
std::optional<Element> greatest(const Bits& candidates, const std::vector<Bits>& down) {
  for (auto g = candidates.find_first(); g != Bits::npos; g = candidates.find_next(g))
    if (candidates.is_subset_of(down[g])) return g;
  return std::nullopt;
}

}  // namespace

std::optional<FiniteLattice> LatticeBuilder::build(std::vector<Bits> up, std::vector<std::string> labels,
                                                   BuildFailure* failure) {
  auto fail = [&](ErrorCode code, std::string message, std::optional<ElementPair> pair) {
    if (failure) *failure = BuildFailure{code, std::move(message), pair};
    return std::optional<FiniteLattice>{};
  };

  const auto n = up.size();
  if (n == 0) return fail(ErrorCode::InvalidInput, "a lattice needs at least one element", std::nullopt);
  for (const auto& row : up)
    if (row.size() != n) return fail(ErrorCode::InvalidInput, "order matrix is not square", std::nullopt);
  if (!labels.empty() && labels.size() != n)
    return fail(ErrorCode::InvalidInput, "label count does not match element count", std::nullopt);

  auto down = transpose(up);
  for (Element a = 0; a < n; ++a) {
    if (!up[a][a]) return fail(ErrorCode::NotAPartialOrder, "order is not reflexive at " + std::to_string(a), ElementPair{a, a});
    for (Element b = a + 1; b < n; ++b)
      if (up[a][b] && up[b][a])
        return fail(ErrorCode::NotAPartialOrder, "cycle through " + pair_text({a, b}), ElementPair{a, b});
    for (auto b = up[a].find_first(); b != Bits::npos; b = up[a].find_next(b))
      if (!up[b].is_subset_of(up[a]))
        return fail(ErrorCode::NotAPartialOrder, "order is not transitive at " + pair_text({a, b}), ElementPair{a, b});
  }

  FiniteLattice lattice;
  lattice.n_ = n;
  lattice.meet_.assign(n * n, 0);
  lattice.join_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      auto m = greatest(down[a] & down[b], down);
      if (!m) return fail(ErrorCode::NotALattice, "elements " + pair_text({a, b}) + " have no meet", ElementPair{a, b});
      auto j = greatest(up[a] & up[b], up);
      if (!j) return fail(ErrorCode::NotALattice, "elements " + pair_text({a, b}) + " have no join", ElementPair{a, b});
      lattice.meet_[a * n + b] = lattice.meet_[b * n + a] = *m;
      lattice.join_[a * n + b] = lattice.join_[b * n + a] = *j;
    }
  }

  lattice.cover_.assign(n, Bits(n));
  lattice.lower_.assign(n, {});
  lattice.upper_.assign(n, {});
  for (Element a = 0; a < n; ++a)
    for (auto b = up[a].find_first(); b != Bits::npos; b = up[a].find_next(b))
      if (b != a && (up[a] & down[b]).count() == 2) {
        lattice.cover_[a].set(b);
        lattice.upper_[a].push_back(b);
        lattice.lower_[b].push_back(a);
      }
  for (auto& lower : lattice.lower_) std::sort(lower.begin(), lower.end());

  lattice.bottom_ = lattice.top_ = 0;
  for (Element a = 1; a < n; ++a) {
    lattice.bottom_ = lattice.meet(lattice.bottom_, a);
    lattice.top_ = lattice.join(lattice.top_, a);
  }
  if (labels.empty()) {
    labels.resize(n);
    for (Element a = 0; a < n; ++a) labels[a] = std::to_string(a);
  }
  lattice.labels_ = std::move(labels);
  lattice.up_ = std::move(up);
  lattice.down_ = std::move(down);
  return lattice;
}

FiniteLattice FiniteLattice::from_order(std::vector<Bits> up, std::vector<std::string> labels) {
  BuildFailure failure{};
  auto lattice = LatticeBuilder::build(std::move(up), std::move(labels), &failure);
  if (!lattice) throw Error(failure.code, failure.message, failure.pair);
  return std::move(*lattice);
}

std::optional<FiniteLattice> FiniteLattice::try_from_order(std::vector<Bits> up, std::vector<std::string> labels) {
  return LatticeBuilder::build(std::move(up), std::move(labels), nullptr);
}

FiniteLattice FiniteLattice::from_covers(std::size_t n, std::span<const ElementPair> covers,
                                         std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "a lattice needs at least one element");
  std::vector<Bits> reach(n, Bits(n));
  for (auto [a, b] : covers) {
    if (a >= n || b >= n)
      throw Error(ErrorCode::InvalidInput, "cover " + pair_text({a, b}) + " is out of range", ElementPair{a, b});
    if (a == b) throw Error(ErrorCode::NotAPartialOrder, "self-cover at " + std::to_string(a), ElementPair{a, b});
    reach[a].set(b);
  }
  for (Element a = 0; a < n; ++a) reach[a].set(a);
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (reach[i][k]) reach[i] |= reach[k];
  return from_order(std::move(reach), std::move(labels));
}

std::vector<ElementPair> FiniteLattice::cover_pairs() const {
  std::vector<ElementPair> out;
  for (Element a = 0; a < n_; ++a)
    for (auto b : upper_[a]) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Element> FiniteLattice::find(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

FiniteLattice FiniteLattice::relabeled(const std::vector<Element>& order) const {
  if (order.size() != n_) throw Error(ErrorCode::InvalidInput, "relabeling has the wrong length");
  std::vector<Bits> up(n_, Bits(n_));
  std::vector<std::string> labels(n_);
  for (Element i = 0; i < n_; ++i) {
    labels[i] = labels_[order[i]];
    for (Element j = 0; j < n_; ++j)
      if (up_[order[i]][order[j]]) up[i].set(j);
  }
  return from_order(std::move(up), std::move(labels));
}

std::vector<Element> join_irreducibles(const FiniteLattice& lattice) {
  std::vector<Element> out;
  for (Element a = 0; a < lattice.size(); ++a)
    if (lattice.is_join_irreducible(a)) out.push_back(a);
  return out;
}

std::vector<Element> meet_irreducibles(const FiniteLattice& lattice) {
  std::vector<Element> out;
  for (Element a = 0; a < lattice.size(); ++a)
    if (lattice.is_meet_irreducible(a)) out.push_back(a);
  return out;
}

Element mu(const FiniteLattice& lattice, Element a) {
  const auto& lower = lattice.lower_covers(a);
  if (lower.empty()) throw Error(ErrorCode::NoLowerCovers, "element " + std::to_string(a) + " has no lower covers");
  Element m = lower.front();
  for (auto b : lower) m = lattice.meet(m, b);
  return m;
}

FiniteLattice interval(const FiniteLattice& lattice, Element lo, Element hi) {
  if (!lattice.leq(lo, hi))
    throw Error(ErrorCode::EmptyInterval, "element " + std::to_string(lo) + " is not below " + std::to_string(hi),
                ElementPair{lo, hi});
  auto inside = members(lattice.up_set(lo) & lattice.down_set(hi));
  const auto k = inside.size();
  std::vector<Bits> up(k, Bits(k));
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = lattice.label(inside[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (lattice.leq(inside[i], inside[j])) up[i].set(j);
  }
  return FiniteLattice::from_order(std::move(up), std::move(labels));
}

FiniteLattice order_dual(const FiniteLattice& lattice) {
  return FiniteLattice::from_order(transpose(lattice.order_matrix()), lattice.labels());
}

std::string canonical_code(const FiniteLattice& lattice) {
  return canonical_form(lattice.order_matrix()).code;
}

std::optional<std::vector<Element>> lattice_isomorphic(const FiniteLattice& lhs, const FiniteLattice& rhs) {
  if (lhs.size() != rhs.size()) return std::nullopt;
  if (lhs.cover_pairs().size() != rhs.cover_pairs().size()) return std::nullopt;
  auto left = canonical_form(lhs.order_matrix());
  auto right = canonical_form(rhs.order_matrix());
  if (left.code != right.code) return std::nullopt;
  std::vector<Element> witness(lhs.size());
  for (std::size_t pos = 0; pos < lhs.size(); ++pos) witness[left.order[pos]] = right.order[pos];
  return witness;
}

std::vector<N5Sublattice> find_n5_sublattices(const FiniteLattice& lattice) {
  std::vector<N5Sublattice> out;
  const auto n = lattice.size();
  for (Element side = 0; side < n; ++side)
    for (Element low = 0; low < n; ++low) {
      if (lattice.comparable(side, low)) continue;
      for (Element high = 0; high < n; ++high) {
        if (!lattice.less(low, high) || lattice.comparable(side, high)) continue;
        const auto bottom = lattice.meet(side, low);
        const auto top = lattice.join(side, low);
        if (lattice.meet(side, high) == bottom && lattice.join(side, high) == top)
          out.push_back({bottom, side, low, high, top});
      }
    }
  return out;
}

}  // namespace tirs
