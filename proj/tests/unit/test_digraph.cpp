#include "../oracles.hpp"
#include "../support.hpp"
#include "tirs/duality.hpp"
#include "tirs/enumeration.hpp"
#include "tirs/errors.hpp"
#include "tirs/fixtures.hpp"
#include "tirs/io.hpp"

#include <doctest.h>

#include <random>

using namespace tirs;
using support::vx;

namespace {

const std::vector<Digraph>& tirs5() {
  static const auto all = enumerate_tirs_digraphs(5);
  return all;
}

Digraph discrete(std::size_t v) { return Digraph::from_arcs(v, {}); }

bool lti_holds_at(const Digraph& g, Vertex u, Vertex v) {
  for (Vertex w = 0; w < g.size(); ++w)
    if (g.out_set(w) == g.out_set(u) && g.in_set(w).is_subset_of(g.in_set(v))) return true;
  return false;
}

bool uti_holds_at(const Digraph& g, Vertex u, Vertex v) {
  for (Vertex w = 0; w < g.size(); ++w)
    if (g.out_set(w).is_subset_of(g.out_set(u)) && g.in_set(w) == g.in_set(v)) return true;
  return false;
}

// Non-loop arcs among a triple, as a 3x3 matrix in the given order.
std::array<std::array<bool, 3>, 3> shape(const Digraph& g, std::array<Vertex, 3> t) {
  std::array<std::array<bool, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = i != j && g.has_arc(t[i], t[j]);
  return m;
}

}  // namespace

TEST_CASE("neighbourhoods in the dual of N5") {
  const auto g = dual_digraph(fixtures::n5());
  const auto ab = vx(g, "ab"), bc = vx(g, "bc");
  CHECK(g.out_set(ab) == make_bits(3, {ab, bc}));
  CHECK(g.in_set(ab) == make_bits(3, {ab}));
  CHECK(out_set(g, ab) == g.out_set(ab));
  CHECK(in_set(g, bc) == g.in_set(bc));
  const auto one = discrete(1);
  CHECK(one.out_set(0) == make_bits(1, {0}));
  CHECK(one.in_set(0) == make_bits(1, {0}));
}

TEST_CASE("TiRS conditions") {
  const auto report = check_tirs(dual_digraph(fixtures::n5()));
  CHECK(report.separation.holds);
  CHECK(report.regularity.holds);
  CHECK(report.interpolation.holds);

  const auto twin = support::digraph(2, {{0, 1}, {1, 0}});
  const auto s = check_tirs(twin);
  CHECK_FALSE(s.separation.holds);
  CHECK(s.separation.witness == std::vector<std::size_t>{0, 1});

  // xE = {x, y} is strictly inside yE = {x, y, z} although x -> y.
  const auto irregular = support::digraph(3, {{0, 1}, {1, 0}, {1, 2}});
  const auto r = check_tirs(irregular);
  CHECK_FALSE(r.regularity.holds);
  REQUIRE(r.regularity.witness.size() == 2);
  const auto x = r.regularity.witness[0], y = r.regularity.witness[1];
  CHECK(irregular.has_arc(x, y));
  const bool strict_out = irregular.out_set(x).is_proper_subset_of(irregular.out_set(y));
  const bool strict_in = irregular.in_set(y).is_proper_subset_of(irregular.in_set(x));
  CHECK((strict_out || strict_in));

  std::vector<Bits> rows(2, Bits(2));
  rows[0].set(0);
  try {
    check_tirs(Digraph(rows));
    FAIL("expected NotReflexive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotReflexive);
  }
}

TEST_CASE("lower interpolation") {
  CHECK(check_lti(dual_digraph(fixtures::l3_dual())).holds);
  const auto g = dual_digraph(fixtures::n5());
  const auto v = check_lti(g);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == std::vector<std::size_t>{vx(g, "bc"), vx(g, "ca")});
  CHECK_FALSE(lti_holds_at(g, v.witness[0], v.witness[1]));
  CHECK(check_lti(discrete(3)).holds);
}

TEST_CASE("upper interpolation") {
  const auto gl4 = dual_digraph(fixtures::l4());
  const auto gl4d = dual_digraph(fixtures::l4_dual());
  CHECK(digraph_isomorphic(gl4d, gl4.reversed()));
  CHECK(check_uti(gl4d).holds == check_lti(gl4).holds);
  CHECK_FALSE(check_uti(gl4d).holds);
  CHECK(check_lti(gl4d).holds);
  CHECK(check_uti(discrete(3)).holds);
  const auto gn5 = dual_digraph(fixtures::n5());
  CHECK(check_uti(gn5.reversed()).holds == check_lti(gn5).holds);
  CHECK_FALSE(check_uti(gn5.reversed()).holds);
  const auto w = check_uti(gn5);
  if (!w.holds) CHECK_FALSE(uti_holds_at(gn5, w.witness[0], w.witness[1]));
}

TEST_CASE("distinct neighbourhoods") {
  const auto gn5 = dual_digraph(fixtures::n5());
  CHECK(check_djsd(gn5).holds);
  CHECK(check_dmsd(gn5).holds);
  CHECK(check_dsd(gn5).holds);
  const auto gl4 = dual_digraph(fixtures::l4());
  CHECK(check_dmsd(gl4).holds);
  const auto j = check_djsd(gl4);
  CHECK_FALSE(j.holds);
  REQUIRE(j.witness.size() == 2);
  CHECK(gl4.in_set(j.witness[0]) == gl4.in_set(j.witness[1]));
  CHECK_FALSE(check_dsd(gl4).holds);
  CHECK(check_djsd(discrete(2)).holds);
  CHECK(check_dmsd(discrete(2)).holds);
}

TEST_CASE("transitivity and posets") {
  const auto gn5 = dual_digraph(fixtures::n5());
  const auto t = is_transitive(gn5);
  CHECK_FALSE(t.holds);
  CHECK(t.witness == std::vector<std::size_t>{vx(gn5, "ab"), vx(gn5, "bc"), vx(gn5, "ca")});
  const auto c3 = dual_digraph(fixtures::chain(3));
  CHECK(c3.size() == 2);
  CHECK(c3.arc_count() == 3);
  CHECK(is_poset(c3).holds);
  CHECK(is_poset(discrete(4)).holds);
  CHECK_FALSE(is_poset(support::digraph(2, {{0, 1}, {1, 0}})).holds);
}

TEST_CASE("induced patterns") {
  const auto gk = dual_digraph(fixtures::k());
  const auto g0 = find_induced(gk, Pattern::G0);
  const std::array<Vertex, 3> dotted{vx(gk, "dc"), vx(gk, "cb"), vx(gk, "ed")};
  CHECK(std::find(g0.begin(), g0.end(), dotted) != g0.end());

  const auto gm3 = dual_digraph(fixtures::m3());
  CHECK(find_induced(gm3, Pattern::G0).empty());
  CHECK(find_induced(gm3, Pattern::G1).empty());
  CHECK_FALSE(find_induced(dual_digraph(fixtures::l4()), Pattern::G1).empty());
  CHECK(find_induced(discrete(3), Pattern::G2).size() == 1);

  for (const auto& g : tirs5())
    for (auto p : {Pattern::G0, Pattern::G1, Pattern::G2})
      for (const auto& t : find_induced(g, p)) {
        const auto m = shape(g, t);
        const int count = m[0][1] + m[0][2] + m[1][0] + m[1][2] + m[2][0] + m[2][1];
        if (p == Pattern::G0) CHECK((count == 2 && m[0][1] && m[1][2]));
        if (p == Pattern::G1) CHECK((count == 1 && m[0][1]));
        if (p == Pattern::G2) CHECK(count == 0);
      }
}

TEST_CASE("forbidden induced subgraphs") {
  CHECK(check_fis(dual_digraph(fixtures::m3())).holds);
  CHECK_FALSE(check_fis(dual_digraph(fixtures::k())).holds);
  const auto gl3 = dual_digraph(fixtures::l3_dual());
  CHECK_FALSE(check_fis(gl3).holds);
  CHECK_FALSE(find_induced(gl3, Pattern::G0).empty());
  CHECK(find_induced(gl3, Pattern::G1).empty());
}

TEST_CASE("weak transitivity") {
  const auto gm3 = dual_digraph(fixtures::m3());
  CHECK(check_wt0(gm3).holds);
  CHECK(check_wt1(gm3).holds);
  CHECK_FALSE(check_wt0(dual_digraph(fixtures::l3_dual())).holds);
  CHECK_FALSE(check_wt1(dual_digraph(fixtures::l4())).holds);
  CHECK_FALSE(check_wt1(dual_digraph(fixtures::l4_dual())).holds);
}

TEST_CASE("weak transitivity is pattern exclusion on every small reflexive digraph") {
  for (std::size_t v = 1; v <= 4; ++v)
    for (const auto& g : all_reflexive_digraphs(v)) {
      CHECK(check_wt0(g).holds == find_induced(g, Pattern::G0).empty());
      CHECK(check_wt1(g).holds == find_induced(g, Pattern::G1).empty());
      CHECK(check_fis(g).holds == (check_wt0(g).holds && check_wt1(g).holds));
    }
}

TEST_CASE("digraph isomorphism") {
  const auto gn5 = dual_digraph(fixtures::n5());
  std::vector<Vertex> order{2, 0, 1};
  const auto copy = gn5.induced(order);
  const auto w = digraph_isomorphic(gn5, copy);
  REQUIRE(w.has_value());
  for (auto [x, y] : gn5.arcs()) CHECK(copy.has_arc((*w)[x], (*w)[y]));
  CHECK_FALSE(digraph_isomorphic(gn5, discrete(3)));
  const auto gl4 = dual_digraph(fixtures::l4()), gl4d = dual_digraph(fixtures::l4_dual());
  CHECK_FALSE(digraph_isomorphic(gl4, gl4d));
  CHECK_FALSE(oracle::brute_isomorphic(oracle::arcs_of(gl4), oracle::arcs_of(gl4d)));
}

TEST_CASE("digraph canonical code agrees with brute force") {
  std::mt19937 rng(7);
  for (int round = 0; round < 300; ++round) {
    const std::size_t v = 1 + rng() % 6;
    std::vector<Arc> a, b;
    for (Vertex x = 0; x < v; ++x)
      for (Vertex y = 0; y < v; ++y)
        if (x != y && rng() % 3 == 0) a.emplace_back(x, y);
    // Half the time b is a relabelled copy of a, otherwise independent.
    std::vector<Vertex> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (round % 2 == 0) {
      for (auto [x, y] : a) b.emplace_back(perm[x], perm[y]);
    } else {
      for (Vertex x = 0; x < v; ++x)
        for (Vertex y = 0; y < v; ++y)
          if (x != y && rng() % 3 == 0) b.emplace_back(x, y);
    }
    const auto ga = Digraph::from_arcs(v, a), gb = Digraph::from_arcs(v, b);
    const bool brute = oracle::brute_isomorphic(oracle::arcs_of(ga), oracle::arcs_of(gb));
    CHECK((canonical_code(ga) == canonical_code(gb)) == brute);
    CHECK(digraph_isomorphic(ga, gb).has_value() == brute);
  }
}

TEST_CASE("flag implications and reversal on every TiRS digraph up to five vertices") {
  for (const auto& g : tirs5()) {
    const auto t = check_tirs(g);
    REQUIRE(t.holds());
    const auto r = g.reversed();
    CHECK(check_tirs(r).holds());
    CHECK(check_lti(g).holds == check_uti(r).holds);
    CHECK(check_djsd(g).holds == check_dmsd(r).holds);
    if (check_dmsd(g).holds && check_lti(g).holds) CHECK(is_transitive(g).holds);
    if (is_transitive(g).holds) CHECK(is_poset(g).holds);
    if (check_lti(g).holds) CHECK(t.interpolation.holds);
    if (check_djsd(g).holds || check_dmsd(g).holds) CHECK(t.separation.holds);
    const auto l = check_lti(g);
    if (!l.holds) CHECK_FALSE(lti_holds_at(g, l.witness[0], l.witness[1]));
    const auto u = check_uti(g);
    if (!u.holds) CHECK_FALSE(uti_holds_at(g, u.witness[0], u.witness[1]));
  }
}

TEST_CASE("DOT rendering") {
  const auto dot = digraph_to_dot(dual_digraph(fixtures::l4()));
  CHECK(dot.find("dir=both") != std::string::npos);
  CHECK(dot.find("label=\"ab\"") != std::string::npos);
  // Four vertices, three edges: ab->dc, ab<->cb, cb->ea.
  CHECK(std::count(dot.begin(), dot.end(), '>') == 3);
  const auto loops = digraph_to_dot(discrete(2));
  CHECK(loops.find("->") == std::string::npos);
}
