// Command-line front end. Exit codes: 0 success, 1 a checked statement or
// property failed, 2 bad input.

#include "tirs/convex_geometry.hpp"
#include "tirs/duality.hpp"
#include "tirs/enumeration.hpp"
#include "tirs/errors.hpp"
#include "tirs/fixtures.hpp"
#include "tirs/harness.hpp"
#include "tirs/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace tirs;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

Instance load_instance(const std::string& path) {
  const auto doc = read_json_file(path);
  if (looks_like_lattice(doc)) return lattice_instance(path, lattice_from_json(doc));
  if (looks_like_digraph(doc)) {
    auto loaded = digraph_from_json(doc);
    if (loaded.loops_added) std::cerr << "warning: " << path << ": missing loops were added\n";
    return digraph_instance(path, std::move(loaded.graph));
  }
  throw Error(ErrorCode::InvalidInput, path + ": neither a lattice (n, covers) nor a digraph (v, arcs)");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

void check_bound(std::size_t max_n, bool allow_n8) {
  if (max_n == 8 && !allow_n8) throw Error(ErrorCode::BoundTooLarge, "n = 8 needs --allow-n8");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices, TiRS digraphs and the duality between them"};
  app.require_subcommand(1);

  std::string file, property, out_file, report_file, holds, fails;
  bool dot = false, allow_n8 = false;
  std::size_t max_n = 7, max_v = 5;
  std::vector<std::string> only;

  auto* dual = app.add_subcommand("dual", "Dual digraph of a lattice");
  dual->add_option("lattice", file, "Lattice JSON file")->required();
  dual->add_flag("--dot", dot, "Emit DOT instead of JSON");

  auto* primal = app.add_subcommand("primal", "Lattice of maximal maps of a digraph");
  primal->add_option("digraph", file, "Digraph JSON file")->required();
  primal->add_flag("--dot", dot, "Emit DOT instead of JSON");

  auto* check = app.add_subcommand("check", "Decide one property of a lattice or digraph");
  check->add_option("property", property, "Property name (see `properties`)")->required();
  check->add_option("file", file, "Lattice or digraph JSON file")->required();

  auto* properties = app.add_subcommand("properties", "List property names");

  auto* roundtrip = app.add_subcommand("roundtrip", "Check the round trip through the duality");
  roundtrip->add_option("file", file, "Lattice or digraph JSON file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "All lattices up to isomorphism, one JSON record per line");
  enumerate->add_option("--max-n", max_n, "Largest lattice size")->required();
  enumerate->add_option("--out", out_file, "Output file (default stdout)");
  enumerate->add_flag("--allow-n8", allow_n8, "Permit n = 8");

  auto* verify = app.add_subcommand("verify-theorems", "Run every registered statement over the small catalogs");
  verify->add_option("--max-n", max_n, "Lattice catalog bound")->default_val(7);
  verify->add_option("--max-v", max_v, "TiRS digraph bound")->default_val(5);
  verify->add_option("--report", report_file, "Write the JSON report here");
  verify->add_option("--only", only, "Restrict to these statement ids");
  verify->add_flag("--allow-n8", allow_n8, "Permit n = 8");

  auto* search = app.add_subcommand("search", "Catalog lattices where one property holds and another fails");
  search->add_option("--holds", holds, "Property that must hold")->required();
  search->add_option("--fails", fails, "Property that must fail")->required();
  search->add_option("--max-n", max_n, "Lattice catalog bound")->required();
  search->add_flag("--allow-n8", allow_n8, "Permit n = 8");

  auto* convexify = app.add_subcommand("convexify", "Convex geometry of a meet-distributive lattice");
  convexify->add_option("lattice", file, "Lattice JSON file")->required();

  std::string fixture_name;
  auto* fixture = app.add_subcommand("fixture", "Print a named lattice (N5, L4, L4D, L3D, M3, K, B2, CHAIN<k>)");
  fixture->add_option("name", fixture_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*dual) {
      const auto g = dual_digraph(lattice_from_json(read_json_file(file)));
      std::cout << (dot ? digraph_to_dot(g) : digraph_to_json(g).dump() + "\n");
      return kOk;
    }
    if (*primal) {
      auto loaded = digraph_from_json(read_json_file(file));
      if (loaded.loops_added) std::cerr << "warning: " << file << ": missing loops were added\n";
      if (!check_tirs(loaded.graph).holds()) std::cerr << "warning: " << file << ": digraph is not TiRS\n";
      const auto l = mpe_lattice(loaded.graph);
      std::cout << (dot ? lattice_to_dot(l) : lattice_to_json(l).dump() + "\n");
      return kOk;
    }
    if (*check) {
      const auto& def = find_property(property);
      const auto instance = load_instance(file);
      const auto verdict = evaluate_property(def, instance);
      json out{{"property", def.name}, {"holds", verdict.holds}, {"witness", verdict.witness}};
      if (!verdict.holds && !verdict.witness.empty()) {
        json names = json::array();
        for (auto x : verdict.witness)
          names.push_back(def.side == Side::Lattice ? instance.lattice->label(x) : instance.digraph->name(x));
        out["witness_labels"] = names;
      }
      std::cout << out.dump() << "\n";
      return verdict.holds ? kOk : kFailed;
    }
    if (*properties) {
      for (const auto& def : property_registry())
        std::cout << def.name << "\t" << (def.side == Side::Lattice ? "lattice" : "digraph") << "\t"
                  << def.description << "\n";
      return kOk;
    }
    if (*roundtrip) {
      const auto instance = load_instance(file);
      bool ok = false;
      if (instance.digraph->has_mdfips() && instance.lattice) {
        ok = roundtrip_lattice(*instance.lattice);
      } else {
        if (!check_tirs(*instance.digraph).holds())
          throw Error(ErrorCode::InvalidInput, file + ": digraph is not TiRS");
        ok = roundtrip_digraph(*instance.digraph);
      }
      std::cout << json{{"roundtrip", ok}}.dump() << "\n";
      return ok ? kOk : kFailed;
    }
    if (*enumerate) {
      check_bound(max_n, allow_n8);
      const auto catalog = enumerate_lattices(max_n);
      std::ostringstream text;
      write_catalog(text, catalog);
      write_text(out_file, text.str());
      const auto counts = catalog.count_by_size();
      for (std::size_t k = 1; k < counts.size(); ++k) std::cerr << "n=" << k << ": " << counts[k] << "\n";
      return kOk;
    }
    if (*verify) {
      check_bound(max_n, allow_n8);
      CampaignOptions options;
      options.max_n = max_n;
      options.max_v = max_v;
      options.only = only;
      const auto checks = verify_theorems(options);
      std::cout << report_to_text(checks);
      if (!report_file.empty()) write_text(report_file, report_to_json(checks).dump(2) + "\n");
      return all_passed(checks) ? kOk : kFailed;
    }
    if (*search) {
      check_bound(max_n, allow_n8);
      for (const auto& l : search_counterexamples(holds, fails, max_n)) std::cout << lattice_to_json(l).dump() << "\n";
      return kOk;
    }
    if (*convexify) {
      const auto system = lattice_to_convex_geometry(lattice_from_json(read_json_file(file)));
      std::cout << closure_system_to_json(system).dump() << "\n";
      return kOk;
    }
    if (*fixture) {
      std::cout << lattice_to_json(fixtures::by_name(fixture_name)).dump() << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
