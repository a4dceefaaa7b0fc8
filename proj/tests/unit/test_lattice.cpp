#include "../oracles.hpp"
#include "../support.hpp"
#include "tirs/enumeration.hpp"
#include "tirs/errors.hpp"
#include "tirs/fixtures.hpp"
#include "tirs/properties.hpp"

#include <doctest.h>

#include <random>

using namespace tirs;
using support::el;

namespace {

const LatticeCatalog& catalog7() {
  static const auto catalog = enumerate_lattices(7);
  return catalog;
}

std::vector<Element> shuffled_order(std::size_t n, unsigned seed) {
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::vector<Element> names_to_elements(const FiniteLattice& l, std::initializer_list<const char*> names) {
  std::vector<Element> out;
  for (auto n : names) out.push_back(el(l, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("two-element chain from a single cover") {
  const auto covers = support::pairs({{0, 1}});
  const auto l = FiniteLattice::from_covers(2, covers);
  CHECK(l.size() == 2);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 1);
  CHECK(l.covers(0, 1));
  CHECK(l.meet(0, 1) == 0);
  CHECK(l.join(0, 1) == 1);
}

TEST_CASE("N5 built from its covers") {
  const auto l = fixtures::n5();
  CHECK(l.size() == 5);
  CHECK(l.label(l.bottom()) == "0");
  CHECK(l.label(l.top()) == "1");
  CHECK(l.less(el(l, "c"), el(l, "b")));
  CHECK_FALSE(l.comparable(el(l, "a"), el(l, "b")));
  CHECK(l.join(el(l, "a"), el(l, "c")) == l.top());
  CHECK(l.meet(el(l, "a"), el(l, "b")) == l.bottom());
  const auto cp = l.cover_pairs();
  CHECK(std::is_sorted(cp.begin(), cp.end()));
  CHECK(cp.size() == 5);
}

TEST_CASE("from_covers rejects bad input") {
  SUBCASE("no top") {
    const auto covers = support::pairs({{0, 1}, {0, 2}});
    try {
      FiniteLattice::from_covers(4, covers);
      FAIL("expected NotALattice");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotALattice);
      REQUIRE(e.pair().has_value());
      const auto [a, b] = *e.pair();
      // The named pair must genuinely lack a join or a meet.
      auto leq = [](Element x, Element y) { return x == y || (x == 0 && (y == 1 || y == 2)); };
      auto bounded = [&](bool upper) {
        std::vector<Element> bounds;
        for (Element c = 0; c < 4; ++c)
          if (upper ? leq(a, c) && leq(b, c) : leq(c, a) && leq(c, b)) bounds.push_back(c);
        return std::any_of(bounds.begin(), bounds.end(), [&](Element c) {
          return std::all_of(bounds.begin(), bounds.end(), [&](Element d) { return upper ? leq(c, d) : leq(d, c); });
        });
      };
      CHECK((!bounded(true) || !bounded(false)));
    }
  }
  SUBCASE("cycle") {
    const auto covers = support::pairs({{0, 1}, {1, 2}, {2, 0}});
    try {
      FiniteLattice::from_covers(3, covers);
      FAIL("expected NotAPartialOrder");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAPartialOrder);
      CHECK(e.pair().has_value());
    }
  }
  SUBCASE("self cover") {
    const auto covers = support::pairs({{0, 0}});
    CHECK_THROWS_AS(FiniteLattice::from_covers(1, covers), Error);
  }
  SUBCASE("index out of range") {
    const auto covers = support::pairs({{0, 5}});
    try {
      FiniteLattice::from_covers(2, covers);
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidInput);
    }
  }
  SUBCASE("two maximal elements") {
    const auto covers = support::pairs({{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    try {
      FiniteLattice::from_covers(5, covers);
      FAIL("expected NotALattice");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotALattice);
    }
  }
  SUBCASE("empty") { CHECK_THROWS_AS(FiniteLattice::from_covers(0, {}), Error); }
}

TEST_CASE("irreducibles") {
  const auto n5 = fixtures::n5();
  CHECK(join_irreducibles(n5) == names_to_elements(n5, {"a", "b", "c"}));
  CHECK(meet_irreducibles(n5) == names_to_elements(n5, {"a", "b", "c"}));

  const auto c2 = fixtures::chain(2);
  CHECK(join_irreducibles(c2) == std::vector<Element>{1});
  CHECK(meet_irreducibles(c2) == std::vector<Element>{0});

  const auto l4 = fixtures::l4();
  CHECK(join_irreducibles(l4) == names_to_elements(l4, {"d", "e", "a", "c"}));
  CHECK(meet_irreducibles(l4) == names_to_elements(l4, {"a", "b", "c"}));

  const auto one = fixtures::chain(1);
  CHECK(join_irreducibles(one).empty());
  CHECK(meet_irreducibles(one).empty());
}

TEST_CASE("mu is the meet of the lower covers") {
  const auto n5 = fixtures::n5();
  CHECK(mu(n5, n5.top()) == n5.bottom());
  const auto c3 = fixtures::chain(3);
  CHECK(mu(c3, 1) == 0);
  const auto b2 = fixtures::b2();
  CHECK(mu(b2, b2.top()) == b2.bottom());
  try {
    mu(n5, n5.bottom());
    FAIL("expected NoLowerCovers");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoLowerCovers);
  }
}

TEST_CASE("intervals") {
  const auto n5 = fixtures::n5();
  CHECK(lattice_isomorphic(interval(n5, n5.bottom(), n5.top()), n5));
  const auto upper = interval(n5, el(n5, "c"), n5.top());
  CHECK(lattice_isomorphic(upper, fixtures::chain(3)));
  CHECK(upper.label(upper.bottom()) == "c");
  CHECK(upper.label(upper.top()) == "1");
  CHECK(interval(n5, el(n5, "a"), el(n5, "a")).size() == 1);
  try {
    interval(n5, el(n5, "a"), el(n5, "b"));
    FAIL("expected EmptyInterval");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyInterval);
  }
}

TEST_CASE("order duals") {
  CHECK(lattice_isomorphic(order_dual(fixtures::l4()), fixtures::l4_dual()));
  for (std::size_t k = 1; k <= 6; ++k) CHECK(lattice_isomorphic(order_dual(fixtures::chain(k)), fixtures::chain(k)));
  const auto n5 = fixtures::n5();
  const auto twice = order_dual(order_dual(n5));
  CHECK(twice.order_matrix() == n5.order_matrix());
  CHECK(twice.labels() == n5.labels());
}

TEST_CASE("lattice isomorphism") {
  const auto n5 = fixtures::n5();
  for (unsigned seed = 0; seed < 10; ++seed) {
    const auto order = shuffled_order(n5.size(), seed);
    const auto copy = n5.relabeled(order);
    const auto witness = lattice_isomorphic(n5, copy);
    REQUIRE(witness.has_value());
    for (auto [a, b] : n5.cover_pairs()) CHECK(copy.covers((*witness)[a], (*witness)[b]));
  }
  CHECK_FALSE(lattice_isomorphic(n5, fixtures::m3()));
  CHECK_FALSE(oracle::brute_isomorphic(oracle::order_of(n5), oracle::order_of(fixtures::m3())));
  CHECK_FALSE(lattice_isomorphic(fixtures::chain(3), fixtures::b2()));
  CHECK_FALSE(lattice_isomorphic(fixtures::l4(), fixtures::l4_dual()));
}

TEST_CASE("canonical code agrees with brute-force isomorphism on the catalog") {
  const auto& entries = catalog7().entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& l = entries[i];
    const auto copy = l.relabeled(shuffled_order(l.size(), static_cast<unsigned>(i)));
    CHECK(canonical_code(copy) == canonical_code(l));
    if (l.size() <= 6)
      for (std::size_t j = i + 1; j < entries.size() && entries[j].size() == l.size(); ++j)
        CHECK_FALSE(oracle::brute_isomorphic(oracle::order_of(l), oracle::order_of(entries[j])));
  }
}

TEST_CASE("N5 sublattices") {
  const auto n5 = fixtures::n5();
  const auto found = find_n5_sublattices(n5);
  REQUIRE(found.size() == 1);
  CHECK(found[0].side == el(n5, "a"));
  CHECK(found[0].low == el(n5, "c"));
  CHECK(found[0].high == el(n5, "b"));
  CHECK(find_n5_sublattices(fixtures::m3()).empty());
  CHECK(oracle::n5_bruteforce(fixtures::m3()).empty());
  CHECK(find_n5_sublattices(fixtures::k()).empty());
}

TEST_CASE("N5 sublattice search matches the five-subset scan and the modular law") {
  for (const auto& l : catalog7().entries) {
    std::set<std::array<std::size_t, 3>> found;
    for (const auto& s : find_n5_sublattices(l)) {
      CHECK(l.meet(s.side, s.high) == s.bottom);
      CHECK(l.join(s.side, s.low) == s.top);
      found.insert({s.side, s.low, s.high});
    }
    CHECK(found == oracle::n5_bruteforce(l));
    CHECK(found.empty() == is_modular(l).holds);
  }
}

TEST_CASE("meet and join are the order's bounds, irreducibles are dense") {
  for (const auto& l : catalog7().entries) {
    const auto n = l.size();
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const auto m = l.meet(a, b), j = l.join(a, b);
        CHECK(l.leq(m, a));
        CHECK(l.leq(m, b));
        CHECK(l.leq(a, j));
        CHECK(l.leq(b, j));
        for (Element c = 0; c < n; ++c) {
          if (l.leq(c, a) && l.leq(c, b)) CHECK(l.leq(c, m));
          if (l.leq(a, c) && l.leq(b, c)) CHECK(l.leq(j, c));
        }
      }
    for (Element a = 0; a < n; ++a) {
      Element join_below = l.bottom();
      for (auto j : join_irreducibles(l))
        if (l.leq(j, a)) join_below = l.join(join_below, j);
      CHECK(join_below == a);
      Element meet_above = l.top();
      for (auto m : meet_irreducibles(l))
        if (l.leq(a, m)) meet_above = l.meet(meet_above, m);
      CHECK(meet_above == a);
    }
    CHECK(join_irreducibles(order_dual(l)) == meet_irreducibles(l));
  }
}

TEST_CASE("covers are exactly the gaps of the order") {
  for (const auto& l : catalog7().entries)
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b) {
        bool gap = l.less(a, b);
        for (Element c = 0; c < l.size() && gap; ++c)
          if (l.less(a, c) && l.less(c, b)) gap = false;
        CHECK(l.covers(a, b) == gap);
      }
}

TEST_CASE("fixtures by name") {
  for (const auto& name : fixtures::names()) CHECK_NOTHROW(fixtures::by_name(name));
  CHECK(fixtures::by_name("CHAIN4").size() == 4);
  CHECK(lattice_isomorphic(fixtures::by_name("L4D"), fixtures::l4_dual()));
  CHECK_THROWS_AS(fixtures::by_name("nope"), Error);
  CHECK_THROWS_AS(fixtures::chain(0), Error);
}
