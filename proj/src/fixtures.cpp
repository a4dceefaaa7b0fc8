#include "tirs/fixtures.hpp"

#include "tirs/errors.hpp"

#include <map>
#include <utility>

namespace tirs::fixtures {
namespace {

using Names = std::vector<std::string>;
using Covers = std::vector<std::pair<std::string, std::string>>;

FiniteLattice from_named_covers(const Names& names, const Covers& covers) {
  std::map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) index[names[i]] = i;
  std::vector<ElementPair> pairs;
  for (const auto& [lo, hi] : covers) pairs.emplace_back(index.at(lo), index.at(hi));
  return FiniteLattice::from_covers(names.size(), pairs, names);
}

}  // namespace

FiniteLattice n5() {
  return from_named_covers({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"0", "c"}, {"c", "b"}, {"a", "1"}, {"b", "1"}});
}

FiniteLattice l4() {
  return from_named_covers({"0", "a", "b", "c", "d", "e", "1"},
                           {{"0", "d"}, {"0", "e"}, {"d", "a"}, {"d", "b"}, {"e", "b"}, {"e", "c"},
                            {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice l4_dual() {
  return from_named_covers({"0", "a", "b", "c", "d", "e", "1"},
                           {{"0", "c"}, {"0", "d"}, {"0", "e"}, {"c", "a"}, {"d", "a"}, {"d", "b"},
                            {"e", "b"}, {"a", "1"}, {"b", "1"}});
}

FiniteLattice l3_dual() {
  return from_named_covers({"0", "a", "b", "c", "d", "1"},
                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "d"}, {"b", "d"}, {"d", "1"}, {"c", "1"}});
}

FiniteLattice m3() {
  return from_named_covers({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice k() {
  return from_named_covers({"0", "a", "b", "c", "d", "e", "1"},
                           {{"0", "d"}, {"0", "e"}, {"d", "a"}, {"e", "a"}, {"e", "b"}, {"e", "c"},
                            {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice chain(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "a chain needs at least one element");
  std::vector<ElementPair> covers;
  for (Element i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return FiniteLattice::from_covers(k, covers);
}

FiniteLattice b2() {
  return from_named_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

FiniteLattice by_name(const std::string& name) {
  if (name == "N5") return n5();
  if (name == "L4") return l4();
  if (name == "L4D") return l4_dual();
  if (name == "L3D") return l3_dual();
  if (name == "M3") return m3();
  if (name == "K") return k();
  if (name == "B2") return b2();
  if (name.rfind("CHAIN", 0) == 0 && name.size() > 5) {
    try {
      return chain(std::stoul(name.substr(5)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown fixture '" + name + "'");
}

std::vector<std::string> names() { return {"N5", "L4", "L4D", "L3D", "M3", "K", "B2", "CHAIN3"}; }

}  // namespace tirs::fixtures
