#include "tirs/properties.hpp"

#include "tirs/duality.hpp"

#include <algorithm>

namespace tirs {
namespace {

PropertyReport pass(std::string name) { return {std::move(name), true, {}}; }
PropertyReport fail(std::string name, std::vector<Element> witness) {
  return {std::move(name), false, std::move(witness)};
}

}  // namespace

PropertyReport is_usm(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) return fail("usm", {a, b});
  return pass("usm");
}

PropertyReport is_lsm(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      if (l.covers(a, l.join(a, b)) && !l.covers(l.meet(a, b), b)) return fail("lsm", {a, b});
  return pass("lsm");
}

PropertyReport is_modular(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      for (Element c = 0; c < l.size(); ++c)
        if (l.leq(a, c) && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) return fail("mod", {a, b, c});
  return pass("mod");
}

PropertyReport is_distributive(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      for (Element c = 0; c < l.size(); ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return fail("dist", {a, b, c});
  return pass("dist");
}

namespace {

bool jsd_fails(const FiniteLattice& l, Element a, Element b, Element c) {
  return l.join(a, b) == l.join(a, c) && l.join(a, b) != l.join(a, l.meet(b, c));
}

bool msd_fails(const FiniteLattice& l, Element a, Element b, Element c) {
  return l.meet(a, b) == l.meet(a, c) && l.meet(a, b) != l.meet(a, l.join(b, c));
}

}  // namespace

PropertyReport is_jsd(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      for (Element c = 0; c < l.size(); ++c)
        if (jsd_fails(l, a, b, c)) return fail("jsd", {a, b, c});
  return pass("jsd");
}

PropertyReport is_msd(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      for (Element c = 0; c < l.size(); ++c)
        if (msd_fails(l, a, b, c)) return fail("msd", {a, b, c});
  return pass("msd");
}

PropertyReport is_sd(const FiniteLattice& l) {
  auto jsd = is_jsd(l);
  if (!jsd) return fail("sd", jsd.witness);
  auto msd = is_msd(l);
  if (!msd) return fail("sd", msd.witness);
  return pass("sd");
}

PropertyReport is_wjsd(const FiniteLattice& l) {
  const auto js = join_irreducibles(l);
  for (auto a : meet_irreducibles(l))
    for (auto b : js)
      for (Element c = 0; c < l.size(); ++c)
        if (jsd_fails(l, a, b, c)) return fail("wjsd", {a, b, c});
  return pass("wjsd");
}

PropertyReport is_jm_lsm(const FiniteLattice& l) {
  const auto ms = meet_irreducibles(l);
  for (auto a : join_irreducibles(l))
    for (auto b : ms)
      if (l.covers(b, l.join(a, b)) && !l.covers(l.meet(a, b), a)) return fail("jmlsm", {a, b});
  return pass("jmlsm");
}

PropertyReport is_jm_usm(const FiniteLattice& l) {
  const auto ms = meet_irreducibles(l);
  for (auto a : join_irreducibles(l))
    for (auto b : ms)
      if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) return fail("jmusm", {a, b});
  return pass("jmusm");
}

PropertyReport satisfies_labc(const FiniteLattice& l) {
  const auto pairs = mdfips(l);
  const auto ms = meet_irreducibles(l);
  for (auto a : join_irreducibles(l))
    for (auto b : ms) {
      if (l.leq(a, b)) continue;
      auto found = std::any_of(pairs.begin(), pairs.end(),
                               [&](const Mdfip& m) { return m.filter == a && l.leq(b, m.ideal); });
      if (!found) return fail("labc", {a, b});
    }
  return pass("labc");
}

PropertyReport satisfies_uabc(const FiniteLattice& l) {
  const auto pairs = mdfips(l);
  const auto ms = meet_irreducibles(l);
  for (auto a : join_irreducibles(l))
    for (auto b : ms) {
      if (l.leq(a, b)) continue;
      auto found = std::any_of(pairs.begin(), pairs.end(),
                               [&](const Mdfip& m) { return m.ideal == b && l.leq(m.filter, a); });
      if (!found) return fail("uabc", {a, b});
    }
  return pass("uabc");
}

PropertyReport is_meet_distributive(const FiniteLattice& l) {
  for (Element a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    if (!is_distributive(interval(l, mu(l, a), a))) return fail("md", {a});
  }
  return pass("md");
}

}  // namespace tirs
