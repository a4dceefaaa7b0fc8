#pragma once

#include "tirs/convex_geometry.hpp"
#include "tirs/digraph.hpp"
#include "tirs/lattice.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tirs {

/// Which side of the duality a registered property is stated on.
enum class Side { Lattice, Digraph };

/// Everything a theorem check looks at. Lattice instances carry their dual
/// digraph; TiRS digraph instances carry their lattice of maximal maps; plain
/// reflexive digraphs and convex geometries may have no lattice.
struct Instance {
  std::string origin;
  std::optional<FiniteLattice> lattice;
  std::optional<Digraph> digraph;
  std::optional<ClosureSystem> closure;
};

Instance lattice_instance(std::string origin, FiniteLattice lattice);
/// Attaches mpe_lattice(g) when g is TiRS.
Instance digraph_instance(std::string origin, Digraph g);

struct PropertyDef {
  std::string name;
  Side side;
  std::string description;
  std::function<Verdict(const FiniteLattice&)> on_lattice;
  std::function<Verdict(const Digraph&)> on_digraph;
};

/// Registered properties sorted by name. "modular" is an alias of "mod".
const std::vector<PropertyDef>& property_registry();
/// Throws UnknownProperty.
const PropertyDef& find_property(const std::string& name);

/// Lattice properties need the instance's lattice, digraph properties its
/// digraph. Throws InvalidInput when the needed side is missing.
Verdict evaluate_property(const PropertyDef& property, const Instance& instance);

/// Memoised property values for one instance.
class Subject {
 public:
  explicit Subject(const Instance& instance) : instance_(instance) {}
  const Instance& instance() const noexcept { return instance_; }
  bool holds(const std::string& property);
  bool has_side(Side side) const;

 private:
  const Instance& instance_;
  std::map<std::string, bool> cache_;
};

enum class Domain { Lattices, TirsDigraphs, ReflexiveDigraphs, ConvexGeometries };
std::string to_string(Domain domain);

/// A registered statement. Either a rule (premises imply conclusions, or are
/// equivalent to them), or a per-instance `check` returning a failure detail,
/// with an optional `applies` filter on instances.
struct TheoremDef {
  std::string id;
  std::string statement;
  std::vector<Domain> domains;
  std::vector<std::string> premises;
  std::vector<std::string> conclusions;
  bool equivalence = false;
  /// One-directional rule: record instances where the conclusions hold but the premises fail.
  bool report_non_converse = false;
  std::function<std::optional<std::string>(Subject&)> check;
  /// Statement about a whole domain at once; returns (instance index, detail) per failure.
  std::function<std::vector<std::pair<std::size_t, std::string>>(const std::vector<Instance>&)> global_check;
};

const std::vector<TheoremDef>& theorem_registry();

struct Counterexample {
  std::string origin;
  nlohmann::json instance;
  std::string detail;
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  bool pass = true;
  std::size_t checked_count = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<Counterexample> non_converse_witnesses;
};

struct CampaignOptions {
  /// Lattice catalog bound, at most 8.
  std::size_t max_n = 7;
  /// TiRS digraph bound, at most 5.
  std::size_t max_v = 5;
  /// Bound for the labelled reflexive digraph scan, at most 4.
  std::size_t max_reflexive_v = 4;
  /// Ground set bound for generated convex geometries, at most 4.
  std::size_t max_ground = 4;
  /// Directory for the lattice catalog cache; empty disables caching.
  std::string cache_dir;
  /// Only these ids; all when empty.
  std::vector<std::string> only;
};

/// Evaluates every registered statement over its domains, in registry order.
std::vector<TheoremCheck> verify_theorems(const CampaignOptions& options);

/// Catalog entries with at most max_n elements where `holds` holds and `fails`
/// fails. Throws UnknownProperty.
std::vector<FiniteLattice> search_counterexamples(const std::string& holds, const std::string& fails,
                                                  std::size_t max_n);

nlohmann::json report_to_json(const std::vector<TheoremCheck>& checks);
std::string report_to_text(const std::vector<TheoremCheck>& checks);
bool all_passed(const std::vector<TheoremCheck>& checks);

}  // namespace tirs
