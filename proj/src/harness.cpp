#include "tirs/harness.hpp"

#include "tirs/duality.hpp"
#include "tirs/enumeration.hpp"
#include "tirs/errors.hpp"
#include "tirs/io.hpp"
#include "tirs/properties.hpp"

#include <algorithm>
#include <sstream>

namespace tirs {
namespace {

using nlohmann::json;

Verdict from_report(const PropertyReport& report) {
  return report.holds ? Verdict::pass() : Verdict::fail(report.witness);
}

PropertyDef lattice_property(std::string name, std::string description, PropertyReport (*check)(const FiniteLattice&)) {
  return {std::move(name), Side::Lattice, std::move(description),
          [check](const FiniteLattice& l) { return from_report(check(l)); }, {}};
}

PropertyDef digraph_property(std::string name, std::string description, std::function<Verdict(const Digraph&)> check) {
  return {std::move(name), Side::Digraph, std::move(description), {}, std::move(check)};
}

std::vector<PropertyDef> build_properties() {
  std::vector<PropertyDef> out = {
      lattice_property("usm", "upper semimodular", is_usm),
      lattice_property("lsm", "lower semimodular", is_lsm),
      lattice_property("mod", "modular", is_modular),
      lattice_property("modular", "modular (alias of mod)", is_modular),
      lattice_property("dist", "distributive", is_distributive),
      lattice_property("jsd", "join-semidistributive", is_jsd),
      lattice_property("msd", "meet-semidistributive", is_msd),
      lattice_property("sd", "semidistributive", is_sd),
      lattice_property("wjsd", "weak join-semidistributivity over M(L) x J(L) x L", is_wjsd),
      lattice_property("jmlsm", "lower semimodularity over J(L) x M(L)", is_jm_lsm),
      lattice_property("jmusm", "upper semimodularity over J(L) x M(L)", is_jm_usm),
      lattice_property("labc", "MDFIP extension above every ideal generator", satisfies_labc),
      lattice_property("uabc", "MDFIP extension below every filter generator", satisfies_uabc),
      lattice_property("md", "meet-distributive", is_meet_distributive),
      digraph_property("tirs", "separation, regularity and interpolation",
                       [](const Digraph& g) {
                         const auto r = check_tirs(g);
                         if (!r.separation) return r.separation;
                         if (!r.regularity) return r.regularity;
                         return r.interpolation;
                       }),
      digraph_property("s", "separation", [](const Digraph& g) { return check_tirs(g).separation; }),
      digraph_property("r", "relational regularity", [](const Digraph& g) { return check_tirs(g).regularity; }),
      digraph_property("ti", "interpolation", [](const Digraph& g) { return check_tirs(g).interpolation; }),
      digraph_property("lti", "lower interpolation", check_lti),
      digraph_property("uti", "upper interpolation", check_uti),
      digraph_property("djsd", "pairwise distinct in-sets", check_djsd),
      digraph_property("dmsd", "pairwise distinct out-sets", check_dmsd),
      digraph_property("dsd", "pairwise distinct in-sets and out-sets", check_dsd),
      digraph_property("fis", "no induced G0 or G1", check_fis),
      digraph_property("wt0", "first weak transitivity condition", check_wt0),
      digraph_property("wt1", "second weak transitivity condition", check_wt1),
      digraph_property("transitive", "transitive arc relation", is_transitive),
      digraph_property("poset", "reflexive, antisymmetric and transitive", is_poset),
  };
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

std::string join_names(const std::vector<std::string>& names, Subject& subject) {
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += ", ";
    out += name + "=" + (subject.holds(name) ? "true" : "false");
  }
  return out;
}

bool needs_side(const std::vector<std::string>& names, Side side) {
  return std::any_of(names.begin(), names.end(), [&](const auto& n) { return find_property(n).side == side; });
}

// Statement-specific checks. Each returns a failure detail or nothing.

std::optional<std::string> check_roundtrip(Subject& s) {
  const auto& in = s.instance();
  if (!in.lattice) return "digraph has no lattice of maximal maps";
  // Lattice instances carry an annotated dual; digraph instances do not.
  if (in.digraph->has_mdfips()) {
    if (!roundtrip_lattice(*in.lattice)) return "lattice not isomorphic to the lattice of maximal maps of its dual";
  } else if (!roundtrip_digraph(*in.digraph)) {
    return "digraph not isomorphic to the dual of its lattice of maximal maps";
  }
  return std::nullopt;
}

std::optional<std::string> check_neighbourhood_order(Subject& s) {
  const auto& l = *s.instance().lattice;
  const auto& g = *s.instance().digraph;
  const auto& m = g.mdfips();
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < g.size(); ++y) {
      if (g.out_set(x).is_subset_of(g.out_set(y)) != l.leq(m[x].filter, m[y].filter))
        return "out-set inclusion disagrees with filter order at " + g.name(x) + ", " + g.name(y);
      if (g.in_set(x).is_subset_of(g.in_set(y)) != l.leq(m[y].ideal, m[x].ideal))
        return "in-set inclusion disagrees with ideal order at " + g.name(x) + ", " + g.name(y);
    }
  return std::nullopt;
}

std::optional<std::string> check_mdfip_oracle(Subject& s) {
  const auto& l = *s.instance().lattice;
  if (mdfips(l) != mdfips_bruteforce(l)) return "characterisation and definition give different MDFIPs";
  return std::nullopt;
}

std::optional<std::string> check_density(Subject& s) {
  const auto& l = *s.instance().lattice;
  const auto js = join_irreducibles(l);
  const auto ms = meet_irreducibles(l);
  for (Element a = 0; a < l.size(); ++a) {
    Element join_below = l.bottom();
    for (auto j : js)
      if (l.leq(j, a)) join_below = l.join(join_below, j);
    if (join_below != a) return "element " + l.label(a) + " is not the join of the join-irreducibles below it";
    Element meet_above = l.top();
    for (auto m : ms)
      if (l.leq(a, m)) meet_above = l.meet(meet_above, m);
    if (meet_above != a) return "element " + l.label(a) + " is not the meet of the meet-irreducibles above it";
  }
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) {
      const bool j_sep = std::any_of(js.begin(), js.end(), [&](Element j) { return l.leq(j, a) && !l.leq(j, b); });
      const bool m_sep = std::any_of(ms.begin(), ms.end(), [&](Element m) { return l.leq(b, m) && !l.leq(a, m); });
      if (j_sep != !l.leq(a, b) || m_sep != !l.leq(a, b))
        return "irreducible separation disagrees with the order at " + l.label(a) + ", " + l.label(b);
    }
  return std::nullopt;
}

std::optional<std::string> check_covers_maximal(Subject& s) {
  const auto& l = *s.instance().lattice;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) {
      if (l.is_meet_irreducible(b) && l.covers(b, l.join(a, b)))
        for (Element c = 0; c < l.size(); ++c)
          if (l.less(b, c) && !l.leq(a, c))
            return "ideal of " + l.label(b) + " extends to " + l.label(c) + " away from " + l.label(a);
      if (l.is_join_irreducible(a) && l.covers(l.meet(a, b), a))
        for (Element d = 0; d < l.size(); ++d)
          if (l.less(d, a) && !l.leq(d, b))
            return "filter of " + l.label(a) + " extends to " + l.label(d) + " away from " + l.label(b);
    }
  return std::nullopt;
}

std::optional<std::string> check_t_set_covers(Subject& s) {
  const auto& l = *s.instance().lattice;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) {
      const auto t = t_set(l, a, b);
      if (t.empty() != l.leq(a, b))
        return "T set of (" + l.label(a) + ", " + l.label(b) + ") is empty exactly when it should not be";
      for (auto d : t) {
        const bool maximal = std::none_of(t.begin(), t.end(), [&](Element e) { return l.less(d, e); });
        if (maximal && !l.covers(d, l.join(d, a)))
          return "maximal " + l.label(d) + " of T(" + l.label(a) + ", " + l.label(b) + ") not covered by its join with " +
                 l.label(a);
      }
    }
  return std::nullopt;
}

std::optional<std::string> check_irreducible_partners(Subject& s) {
  const auto& l = *s.instance().lattice;
  const auto pairs = mdfips(l);
  for (auto a : join_irreducibles(l))
    if (std::none_of(pairs.begin(), pairs.end(), [&](const Mdfip& p) { return p.filter == a; }))
      return "join-irreducible " + l.label(a) + " generates no MDFIP filter";
  for (auto b : meet_irreducibles(l))
    if (std::none_of(pairs.begin(), pairs.end(), [&](const Mdfip& p) { return p.ideal == b; }))
      return "meet-irreducible " + l.label(b) + " generates no MDFIP ideal";
  return std::nullopt;
}

std::optional<std::string> check_dual_meet_distributive(Subject& s) {
  const auto& in = s.instance();
  const bool conditions = s.holds("djsd") && s.holds("r") && s.holds("lti");
  if (!in.lattice) {
    if (conditions) return "dJSD, R and LTi hold but the digraph has no lattice of maximal maps";
    return std::nullopt;
  }
  if (conditions && !s.holds("tirs")) return "dJSD, R and LTi hold but the digraph is not TiRS";
  if (conditions != s.holds("md"))
    return std::string("dJSD, R and LTi ") + (conditions ? "hold" : "fail") + " but the lattice is " +
           (s.holds("md") ? "" : "not ") + "meet-distributive";
  return std::nullopt;
}

std::optional<std::string> check_convex_geometry(Subject& s) {
  const auto& in = s.instance();
  if (in.closure) {
    if (!is_meet_distributive(cld_lattice(*in.closure)))
      return "closed-set lattice of a convex geometry is not meet-distributive";
    return std::nullopt;
  }
  const auto& l = *in.lattice;
  const auto system = join_irreducible_closure_system(l);
  if (s.holds("md")) {
    if (!is_zero_closure(system)) return "construction: empty set not closed";
    if (const auto aep = satisfies_aep(system); !aep) return "construction: anti-exchange fails";
    if (!lattice_isomorphic(cld_lattice(system), l)) return "construction: closed-set lattice differs from the source";
    return std::nullopt;
  }
  if (satisfies_aep(system) && lattice_isomorphic(cld_lattice(system), l))
    return "lattice is a closed-set lattice with anti-exchange but not meet-distributive";
  return std::nullopt;
}

std::optional<std::string> check_n5_extensions(Subject& s) {
  const auto& l = *s.instance().lattice;
  const auto& g = *s.instance().digraph;
  const auto& m = g.mdfips();
  auto vertex_of = [&](const Mdfip& p) {
    return static_cast<Vertex>(std::find(m.begin(), m.end(), p) - m.begin());
  };
  for (const auto& n5 : find_n5_sublattices(l)) {
    const auto xs = maximal_extensions(l, n5.side, n5.high);
    const auto ys = maximal_extensions(l, n5.high, n5.low);
    const auto zs = maximal_extensions(l, n5.low, n5.side);
    for (const auto& px : xs)
      for (const auto& py : ys)
        for (const auto& pz : zs) {
          const Vertex x = vertex_of(px), y = vertex_of(py), z = vertex_of(pz);
          const std::string where = " at " + g.name(x) + ", " + g.name(y) + ", " + g.name(z);
          if (x == y || y == z || x == z) return "extensions coincide" + where;
          if (g.has_arc(y, x) || g.has_arc(z, y) || g.has_arc(x, z) || g.has_arc(z, x))
            return "extra arc among extensions" + where;
          const auto pattern = g.has_arc(x, y) && g.has_arc(y, z)   ? Pattern::G0
                               : g.has_arc(x, y) || g.has_arc(y, z) ? Pattern::G1
                                                                    : Pattern::G2;
          const auto found = find_induced(g, pattern);
          auto sorted = std::array<Vertex, 3>{x, y, z};
          std::sort(sorted.begin(), sorted.end());
          const bool listed = std::any_of(found.begin(), found.end(), [&](auto t) {
            std::sort(t.begin(), t.end());
            return t == sorted;
          });
          if (!listed) return "triple not reported by the pattern search" + where;
        }
  }
  return std::nullopt;
}

std::optional<std::string> check_ploscica(Subject& s) {
  const auto maps = mpe_enumerate(*s.instance().digraph);
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j)
      if (maps[i].ones.is_subset_of(maps[j].ones) != maps[j].zeros.is_subset_of(maps[i].zeros))
        return "maximal maps " + format_set(maps[i].ones) + " and " + format_set(maps[j].ones) +
               " order their ones and zeros inconsistently";
  return std::nullopt;
}

std::optional<std::string> check_flag_implications(Subject& s) {
  if (s.holds("lti") && !s.holds("ti")) return "LTi holds without Ti";
  if (s.holds("djsd") && !s.holds("s")) return "dJSD holds without S";
  if (s.holds("dmsd") && !s.holds("s")) return "dMSD holds without S";
  return std::nullopt;
}

std::optional<std::string> check_reversal(Subject& s) {
  const auto& g = *s.instance().digraph;
  const auto r = g.reversed();
  if (!check_tirs(r).holds()) return "reversed digraph is not TiRS";
  if (check_lti(g).holds != check_uti(r).holds) return "LTi of the digraph differs from UTi of its reversal";
  if (check_djsd(g).holds != check_dmsd(r).holds) return "dJSD of the digraph differs from dMSD of its reversal";
  return std::nullopt;
}

std::optional<std::string> check_order_dual(Subject& s) {
  const auto& l = *s.instance().lattice;
  const auto d = order_dual(l);
  if (is_jsd(l).holds != is_msd(d).holds) return "JSD differs from MSD of the order dual";
  if (is_lsm(l).holds != is_usm(d).holds) return "LSM differs from USM of the order dual";
  if (is_jm_lsm(l).holds != is_jm_usm(d).holds) return "JM-LSM differs from JM-USM of the order dual";
  if (join_irreducibles(d) != meet_irreducibles(l)) return "J of the order dual differs from M";
  return std::nullopt;
}

std::optional<std::string> check_n5_modular(Subject& s) {
  if (find_n5_sublattices(*s.instance().lattice).empty() != s.holds("mod"))
    return "N5 sublattice search disagrees with the modular law";
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::string>> check_duals_distinct(const std::vector<Instance>& instances) {
  std::map<std::string, std::size_t> seen;
  std::vector<std::pair<std::size_t, std::string>> failures;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto [it, inserted] = seen.emplace(canonical_code(*instances[i].digraph), i);
    if (!inserted) failures.emplace_back(i, "dual digraph isomorphic to that of " + instances[it->second].origin);
  }
  return failures;
}

TheoremDef rule(std::string id, std::string statement, std::vector<Domain> domains, std::vector<std::string> premises,
                 std::vector<std::string> conclusions, bool equivalence, bool non_converse = false) {
  TheoremDef theorem;
  theorem.id = std::move(id);
  theorem.statement = std::move(statement);
  theorem.domains = std::move(domains);
  theorem.premises = std::move(premises);
  theorem.conclusions = std::move(conclusions);
  theorem.equivalence = equivalence;
  theorem.report_non_converse = non_converse;
  return theorem;
}

TheoremDef custom(std::string id, std::string statement, std::vector<Domain> domains,
                   std::function<std::optional<std::string>(Subject&)> check) {
  TheoremDef theorem;
  theorem.id = std::move(id);
  theorem.statement = std::move(statement);
  theorem.domains = std::move(domains);
  theorem.check = std::move(check);
  return theorem;
}

std::vector<TheoremDef> build_theorems() {
  using enum Domain;
  const std::vector<Domain> lat = {Lattices};
  const std::vector<Domain> both = {Lattices, TirsDigraphs};
  const std::vector<Domain> graphs = {Lattices, TirsDigraphs, ReflexiveDigraphs};
  std::vector<TheoremDef> out = {
      custom("LEM_2_3", "out-set inclusion follows the filter order, in-set inclusion the reversed ideal order", lat,
             check_neighbourhood_order),
      rule("PROP_2_5", "the dual digraph of a lattice is TiRS", lat, {}, {"tirs"}, false),
      custom("THM_2_6", "lattices and TiRS digraphs survive the round trip up to isomorphism", both, check_roundtrip),
      custom("PLOSCICA_LEMMA", "maximal maps order their ones-sets and zero-sets inversely", graphs, check_ploscica),
      custom("LEM_3_1", "J(L) is join-dense and M(L) meet-dense", lat, check_density),
      custom("THM_3_2", "MDFIPs are exactly the irreducible pairs with the two cover conditions", lat,
             check_mdfip_oracle),
      custom("LEM_3_4", "cover conditions make the ideal (filter) maximal among those disjoint from the filter (ideal)",
             lat, check_covers_maximal),
      custom("LEM_3_5", "maximal elements d of T(a,b) are covered by d v a", lat, check_t_set_covers),
      custom("PROP_3_7", "every irreducible generates some MDFIP", lat, check_irreducible_partners),
      rule("THM_3_8", "L-abc iff JM-LSM", lat, {"labc"}, {"jmlsm"}, true),
      rule("PROP_3_10", "LTi on the dual iff L-abc", both, {"lti"}, {"labc"}, true),
      rule("THM_3_13", "LTi on the dual iff JM-LSM", both, {"lti"}, {"jmlsm"}, true),
      rule("PROP_3_12", "U-abc iff JM-USM", lat, {"uabc"}, {"jmusm"}, true),
      rule("THM_3_15", "UTi on the dual iff JM-USM", both, {"uti"}, {"jmusm"}, true),
      rule("THM_4_1", "meet-distributive iff JSD and LSM", lat, {"md"}, {"jsd", "lsm"}, true),
      rule("THM_4_2", "JM-LSM and W-JSD imply LSM", lat, {"jmlsm", "wjsd"}, {"lsm"}, false),
      rule("COR_4_5", "meet-distributive iff JM-LSM and JSD", lat, {"md"}, {"jmlsm", "jsd"}, true),
      rule("THM_4_6_i", "dJSD on the dual iff JSD", both, {"djsd"}, {"jsd"}, true),
      rule("THM_4_6_ii", "dMSD on the dual iff MSD", both, {"dmsd"}, {"msd"}, true),
      rule("THM_4_6_iii", "dSD on the dual iff SD", both, {"dsd"}, {"sd"}, true),
      rule("THM_4_7", "dMSD and LTi imply a transitive arc relation", both, {"dmsd", "lti"}, {"transitive"}, false),
      rule("PROP_4_8", "a transitive TiRS digraph is a poset", both, {"tirs", "transitive"}, {"poset"}, false),
      rule("COR_4_9", "MSD and JM-LSM imply distributive", lat, {"msd", "jmlsm"}, {"dist"}, false),
      custom("THM_4_10", "dJSD, R and LTi characterise duals of meet-distributive lattices",
             {Lattices, TirsDigraphs, ReflexiveDigraphs}, check_dual_meet_distributive),
      custom("THM_4_13", "meet-distributive lattices are exactly the closed-set lattices of convex geometries",
             {Lattices, ConvexGeometries}, check_convex_geometry),
      custom("LEM_5_1", "maximal extensions over an N5 sublattice induce G0, G1 or G2", lat, check_n5_extensions),
      rule("PROP_5_2_LSM", "FIS on the dual implies LSM", lat, {"fis"}, {"lsm"}, false),
      rule("PROP_5_2_USM", "FIS on the dual implies USM", lat, {"fis"}, {"usm"}, false),
      rule("THM_5_3", "FIS on the dual implies modular", lat, {"fis"}, {"mod"}, false, true),
      rule("COR_5_6", "wT0 and wT1 on the dual imply modular", lat, {"wt0", "wt1"}, {"mod"}, false, true),
      rule("AUX_MODULAR_SEMIMODULAR", "modular iff USM and LSM", lat, {"mod"}, {"usm", "lsm"}, true),
      custom("AUX_N5_MODULAR", "no N5 sublattice iff modular", lat, check_n5_modular),
      rule("AUX_JSD_WJSD", "JSD implies W-JSD", lat, {"jsd"}, {"wjsd"}, false),
      rule("AUX_LSM_JMLSM", "LSM implies JM-LSM", lat, {"lsm"}, {"jmlsm"}, false),
      rule("AUX_USM_JMUSM", "USM implies JM-USM", lat, {"usm"}, {"jmusm"}, false),
      custom("AUX_ORDER_DUAL", "order duality swaps the one-sided conditions and J with M", lat, check_order_dual),
      rule("AUX_FIS_WT", "FIS iff wT0 and wT1", graphs, {"fis"}, {"wt0", "wt1"}, true),
      custom("AUX_FLAG_IMPLICATIONS", "LTi implies Ti, dJSD and dMSD imply S", graphs, check_flag_implications),
      custom("AUX_REVERSAL", "reversal keeps TiRS and swaps LTi with UTi, dJSD with dMSD", {TirsDigraphs},
             check_reversal),
  };
  TheoremDef injective;
  injective.id = "AUX_DUAL_INJECTIVE";
  injective.statement = "non-isomorphic lattices have non-isomorphic dual digraphs";
  injective.domains = lat;
  injective.global_check = check_duals_distinct;
  out.push_back(std::move(injective));
  return out;
}

std::vector<Instance> build_domain(Domain domain, const CampaignOptions& options) {
  std::vector<Instance> out;
  switch (domain) {
    case Domain::Lattices: {
      const auto catalog =
          options.cache_dir.empty() ? enumerate_lattices(options.max_n) : load_or_build_catalog(options.max_n, options.cache_dir);
      std::vector<std::size_t> index(options.max_n + 1, 0);
      for (const auto& l : catalog.entries)
        out.push_back(lattice_instance("lattice n=" + std::to_string(l.size()) + " #" + std::to_string(index[l.size()]++), l));
      break;
    }
    case Domain::TirsDigraphs: {
      std::vector<std::size_t> index(options.max_v + 1, 0);
      for (auto& g : enumerate_tirs_digraphs(options.max_v)) {
        const auto v = g.size();
        out.push_back(digraph_instance("tirs v=" + std::to_string(v) + " #" + std::to_string(index[v]++), std::move(g)));
      }
      break;
    }
    case Domain::ReflexiveDigraphs:
      for (std::size_t v = 1; v <= options.max_reflexive_v; ++v) {
        std::size_t i = 0;
        for (auto& g : all_reflexive_digraphs(v))
          out.push_back(digraph_instance("reflexive v=" + std::to_string(v) + " #" + std::to_string(i++), std::move(g)));
      }
      break;
    case Domain::ConvexGeometries: {
      std::vector<std::size_t> index(options.max_ground + 1, 0);
      for (auto& c : enumerate_convex_geometries(options.max_ground)) {
        const auto k = c.ground_size();
        Instance in;
        in.origin = "convex ground=" + std::to_string(k) + " #" + std::to_string(index[k]++);
        in.closure = std::move(c);
        out.push_back(std::move(in));
      }
      break;
    }
  }
  return out;
}

json instance_json(const Instance& in, Domain domain) {
  if (in.closure) return closure_system_to_json(*in.closure);
  if (domain == Domain::Lattices && in.lattice) return lattice_to_json(*in.lattice);
  if (in.digraph) return digraph_to_json(*in.digraph);
  return json::object();
}

json counterexample_json(const Counterexample& c) {
  return {{"origin", c.origin}, {"instance", c.instance}, {"detail", c.detail}};
}

void evaluate(const TheoremDef& theorem, Domain domain, const std::vector<Instance>& instances, TheoremCheck& result) {
  auto record = [&](std::vector<Counterexample>& into, const Instance& in, std::string detail) {
    into.push_back({in.origin, instance_json(in, domain), std::move(detail)});
  };
  if (theorem.global_check) {
    result.checked_count += instances.size();
    for (auto& [i, detail] : theorem.global_check(instances)) record(result.counterexamples, instances[i], detail);
    return;
  }
  for (const auto& in : instances) {
    Subject subject(in);
    if (theorem.check) {
      ++result.checked_count;
      std::optional<std::string> failure;
      try {
        failure = theorem.check(subject);
      } catch (const Error& e) {
        failure = std::string("error: ") + e.what();
      }
      if (failure) record(result.counterexamples, in, *failure);
      continue;
    }
    auto missing = [&](Side side) {
      return (needs_side(theorem.premises, side) || needs_side(theorem.conclusions, side)) && !subject.has_side(side);
    };
    if (missing(Side::Lattice) || missing(Side::Digraph)) continue;
    ++result.checked_count;
    const bool premises = std::all_of(theorem.premises.begin(), theorem.premises.end(), [&](const auto& p) { return subject.holds(p); });
    const bool conclusions =
        std::all_of(theorem.conclusions.begin(), theorem.conclusions.end(), [&](const auto& p) { return subject.holds(p); });
    const bool failed = theorem.equivalence ? premises != conclusions : premises && !conclusions;
    if (failed || (theorem.report_non_converse && !premises && conclusions)) {
      auto detail = join_names(theorem.premises, subject);
      if (!detail.empty()) detail += "; ";
      detail += join_names(theorem.conclusions, subject);
      record(failed ? result.counterexamples : result.non_converse_witnesses, in, std::move(detail));
    }
  }
}

}  // namespace

Instance lattice_instance(std::string origin, FiniteLattice lattice) {
  Instance in;
  in.origin = std::move(origin);
  in.digraph = dual_digraph(lattice);
  in.lattice = std::move(lattice);
  return in;
}

Instance digraph_instance(std::string origin, Digraph g) {
  Instance in;
  in.origin = std::move(origin);
  if (g.is_reflexive() && check_tirs(g).holds()) {
    try {
      in.lattice = mpe_lattice(g);
    } catch (const Error&) {
      // Left empty; statements that need the lattice report it.
    }
  }
  in.digraph = std::move(g);
  return in;
}

const std::vector<PropertyDef>& property_registry() {
  static const auto registry = build_properties();
  return registry;
}

const PropertyDef& find_property(const std::string& name) {
  const auto& registry = property_registry();
  const auto it = std::find_if(registry.begin(), registry.end(), [&](const auto& p) { return p.name == name; });
  if (it == registry.end()) throw Error(ErrorCode::UnknownProperty, "unknown property \"" + name + "\"");
  return *it;
}

Verdict evaluate_property(const PropertyDef& property, const Instance& instance) {
  if (property.side == Side::Lattice) {
    if (!instance.lattice) throw Error(ErrorCode::InvalidInput, property.name + " needs a lattice");
    return property.on_lattice(*instance.lattice);
  }
  if (!instance.digraph) throw Error(ErrorCode::InvalidInput, property.name + " needs a digraph");
  return property.on_digraph(*instance.digraph);
}

bool Subject::holds(const std::string& property) {
  if (const auto it = cache_.find(property); it != cache_.end()) return it->second;
  const bool value = evaluate_property(find_property(property), instance_).holds;
  cache_.emplace(property, value);
  return value;
}

bool Subject::has_side(Side side) const {
  return side == Side::Lattice ? instance_.lattice.has_value() : instance_.digraph.has_value();
}

std::string to_string(Domain domain) {
  switch (domain) {
    case Domain::Lattices: return "lattices";
    case Domain::TirsDigraphs: return "tirs-digraphs";
    case Domain::ReflexiveDigraphs: return "reflexive-digraphs";
    case Domain::ConvexGeometries: return "convex-geometries";
  }
  return "?";
}

const std::vector<TheoremDef>& theorem_registry() {
  static const auto registry = build_theorems();
  return registry;
}

std::vector<TheoremCheck> verify_theorems(const CampaignOptions& options) {
  if (options.max_n < 1 || options.max_n > 8) throw Error(ErrorCode::BoundTooLarge, "lattice bound must be 1..8");
  if (options.max_v < 1 || options.max_v > 5) throw Error(ErrorCode::BoundTooLarge, "TiRS digraph bound must be 1..5");
  if (options.max_reflexive_v < 1 || options.max_reflexive_v > 4)
    throw Error(ErrorCode::BoundTooLarge, "reflexive digraph bound must be 1..4");
  for (const auto& id : options.only) {
    const auto& reg = theorem_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& t) { return t.id == id; }))
      throw Error(ErrorCode::UnknownProperty, "unknown theorem id \"" + id + "\"");
  }
  std::map<Domain, std::vector<Instance>> domains;
  std::vector<TheoremCheck> checks;
  for (const auto& theorem : theorem_registry()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), theorem.id) == options.only.end())
      continue;
    TheoremCheck result;
    result.id = theorem.id;
    result.statement = theorem.statement;
    for (auto domain : theorem.domains) {
      auto it = domains.find(domain);
      if (it == domains.end()) it = domains.emplace(domain, build_domain(domain, options)).first;
      evaluate(theorem, domain, it->second, result);
    }
    result.pass = result.counterexamples.empty();
    checks.push_back(std::move(result));
  }
  return checks;
}

std::vector<FiniteLattice> search_counterexamples(const std::string& holds, const std::string& fails, std::size_t max_n) {
  find_property(holds);
  find_property(fails);
  std::vector<FiniteLattice> out;
  for (const auto& l : enumerate_lattices(max_n).entries) {
    const auto in = lattice_instance("", l);
    Subject subject(in);
    if (subject.holds(holds) && !subject.holds(fails)) out.push_back(l);
  }
  return out;
}

json report_to_json(const std::vector<TheoremCheck>& checks) {
  json out = json::object();
  for (const auto& c : checks) {
    json entry;
    entry["statement"] = c.statement;
    entry["pass"] = c.pass;
    entry["checked_count"] = c.checked_count;
    entry["counterexamples"] = json::array();
    for (const auto& x : c.counterexamples) entry["counterexamples"].push_back(counterexample_json(x));
    entry["non_converse_witnesses"] = json::array();
    for (const auto& x : c.non_converse_witnesses) entry["non_converse_witnesses"].push_back(counterexample_json(x));
    out[c.id] = std::move(entry);
  }
  return out;
}

std::string report_to_text(const std::vector<TheoremCheck>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  checked=" << c.checked_count;
    if (!c.counterexamples.empty()) out << "  counterexamples=" << c.counterexamples.size();
    if (!c.non_converse_witnesses.empty()) out << "  non-converse=" << c.non_converse_witnesses.size();
    out << "\n    " << c.statement << "\n";
    for (const auto& x : c.counterexamples) out << "    counterexample " << x.origin << ": " << x.detail << "\n";
    for (const auto& x : c.non_converse_witnesses) out << "    non-converse " << x.origin << ": " << x.detail << "\n";
  }
  return out.str();
}

bool all_passed(const std::vector<TheoremCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

}  // namespace tirs
