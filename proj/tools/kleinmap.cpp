#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "kleinmap/census.hpp"
#include "kleinmap/coloring.hpp"
#include "kleinmap/cycles.hpp"
#include "kleinmap/dartmap.hpp"
#include "kleinmap/fano.hpp"
#include "kleinmap/metrics.hpp"
#include "kleinmap/ooa.hpp"
#include "kleinmap/serialize.hpp"
#include "kleinmap/verify.hpp"

namespace {

using kleinmap::Graph;
using ordered_json = nlohmann::ordered_json;

bool use_color() {
  return isatty(fileno(stderr)) && std::getenv("NO_COLOR") == nullptr;
}

std::string mark(bool pass) {
  if (!use_color()) return pass ? "ok  " : "FAIL";
  return pass ? "\x1b[32mok\x1b[0m  " : "\x1b[31mFAIL\x1b[0m";
}

// Vertex names "<label>.<position>" from each orbit's smallest dart.
std::vector<std::string> klein_vertex_names(const kleinmap::DartMap& m,
                                            const std::vector<kleinmap::CycleLabel>& labels) {
  std::vector<std::string> names(m.vertex_count());
  std::vector<bool> seen(m.vertex_count(), false);
  for (int d = 0; d < m.dart_count(); ++d) {
    int v = m.vertex_of(d);
    if (seen[v]) continue;
    seen[v] = true;
    names[v] = labels[d / 7].str() + "." + std::to_string(d % 7);
  }
  return names;
}

kleinmap::GraphDocument build_document(const std::string& name) {
  kleinmap::GraphDocument doc;
  if (name == "fano") {
    doc.graph = kleinmap::build_heawood();
    std::vector<std::string> names;
    for (int p = 1; p <= 7; ++p) names.push_back(std::to_string(p));
    for (const auto& line : kleinmap::build_fano().lines)
      names.push_back(std::to_string(line[0]) + std::to_string(line[1]) +
                      std::to_string(line[2]));
    doc.names = names;
  } else if (name == "heawood") {
    doc.graph = kleinmap::build_heawood();
  } else if (name == "coxeter") {
    doc.graph = kleinmap::build_coxeter();
    std::vector<std::string> names;
    for (int v = 0; v < 28; ++v) names.push_back(kleinmap::coxeter_vertex_name(v));
    doc.names = names;
  } else if (name == "coxeter-alt") {
    doc.graph = kleinmap::build_coxeter_from_heawood();
  } else if (name == "klein") {
    auto fx = kleinmap::paper_ooa_fixture();
    auto m = kleinmap::zip(fx);
    doc.graph = kleinmap::underlying_graph(m);
    doc.names = klein_vertex_names(m, fx.labels);
  } else if (name == "klein-quartic") {
    auto fx = kleinmap::paper_ooa_fixture();
    auto m = kleinmap::zip(fx);
    auto dual = kleinmap::dual_graph(m);
    if (!dual) throw std::runtime_error("dual graph unexpectedly not simple");
    doc.graph = *dual;
    std::vector<std::string> names;
    for (const auto& l : fx.labels) names.push_back(l.str());
    doc.names = names;
    doc.colors = kleinmap::vertex_color_dual(m, fx.labels);
  } else {
    throw CLI::ValidationError("unknown object name: " + name);
  }
  return doc;
}

int cmd_verify(const std::string& suite, bool corrupt, bool quiet, const char* self) {
  kleinmap::VerifyOptions opt;
  opt.corrupt_fixture = corrupt;
  if (suite == "all" && self) opt.cli_path = self;
  auto report = kleinmap::run_suite(suite, opt);

  if (!quiet) {
    for (const auto& c : report.checks) {
      std::cerr << mark(c.pass) << " " << c.name << ": expected " << c.expected << ", got "
                << c.actual;
      if (!c.note.empty()) std::cerr << "  [" << c.note << "]";
      std::cerr << "\n";
    }
  }

  ordered_json j;
  j["subject"] = report.subject;
  j["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(jc);
  }
  j["passed"] = report.passed;
  std::cout << j.dump(2) << "\n";
  return report.passed ? 0 : 1;
}

int cmd_ooa(bool solve) {
  ordered_json j;
  if (solve) {
    Graph g = kleinmap::build_coxeter();
    auto solved = kleinmap::solve_ooa(g, kleinmap::enumerate_cycles(g, 7), 3);
    if (!solved) throw std::runtime_error("orientation constraints unsatisfiable");
    j["source"] = "solved";
    j["components"] = solved->component_count;
    j["cycles"] = ordered_json::array();
    for (const auto& c : solved->set.cycles) j["cycles"].push_back({{"vertices", c}});
  } else {
    auto fx = kleinmap::paper_ooa_fixture();
    j["source"] = "fixture";
    j["cycles"] = ordered_json::array();
    for (int i = 0; i < fx.size(); ++i)
      j["cycles"].push_back({{"label", fx.labels[i].str()}, {"vertices", fx.cycles[i]}});
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_zip() {
  auto m = kleinmap::zip(kleinmap::paper_ooa_fixture());
  auto s = kleinmap::map_summary(m);
  ordered_json j;
  j["darts"] = m.dart_count();
  j["V"] = s.vertices;
  j["E"] = s.edges;
  j["F"] = s.faces;
  j["genus"] = s.genus;
  ordered_json sizes = ordered_json::object();
  std::set<int> distinct(s.vertex_orbit_sizes.begin(), s.vertex_orbit_sizes.end());
  for (int d : distinct)
    sizes[std::to_string(d)] = std::count(s.vertex_orbit_sizes.begin(),
                                          s.vertex_orbit_sizes.end(), d);
  j["vertex_orbit_sizes"] = sizes;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_color(const std::string& name) {
  if (name != "klein-quartic") throw CLI::ValidationError("color supports only klein-quartic");
  auto fx = kleinmap::paper_ooa_fixture();
  auto m = kleinmap::zip(fx);
  auto dual = kleinmap::dual_graph(m);
  if (!dual) throw std::runtime_error("dual graph unexpectedly not simple");
  auto colors = kleinmap::vertex_color_dual(m, fx.labels);  // throws when improper
  int chi = kleinmap::chromatic_number(*dual);
  ordered_json j;
  j["subject"] = "klein-quartic";
  j["colors"] = colors;
  j["proper"] = true;
  j["chromatic_number"] = chi;
  j["optimal"] = chi == 8;
  std::cout << j.dump(2) << "\n";
  return chi == 8 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter-to-Klein graph and map toolkit"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress progress text on stderr");

  std::string build_name;
  auto* build = app.add_subcommand("build", "print a named graph as JSON");
  build->add_option("name", build_name,
                    "fano|heawood|coxeter|coxeter-alt|klein|klein-quartic")
      ->required();

  std::string verify_suite;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "run a themed verification suite");
  verify->add_option("suite", verify_suite, "coxeter|heawood|klein|map|all")->required();
  verify->add_flag("--corrupt-fixture", corrupt,
                   "test mode: reverse one fixture cycle before checking");

  std::string export_name, export_format = "json";
  auto* exp = app.add_subcommand("export", "serialize a named graph");
  exp->add_option("name", export_name, "object name as in build")->required();
  exp->add_option("--format", export_format, "json|dot");

  bool ooa_solve = false, ooa_fixture = false;
  auto* ooa = app.add_subcommand("ooa", "print the oriented 7-cycle assignment");
  ooa->add_flag("--solve", ooa_solve, "derive the assignment with the parity solver");
  ooa->add_flag("--fixture", ooa_fixture, "print the built-in table (default)");

  bool zip_summary = false;
  auto* zipcmd = app.add_subcommand("zip", "zip the squared cycles and summarize the map");
  zipcmd->add_flag("--summary", zip_summary, "print V/E/F/genus (default)");

  std::string color_name;
  auto* color = app.add_subcommand("color", "print the face-label coloring of the dual");
  color->add_option("name", color_name, "klein-quartic")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      std::cout << kleinmap::to_json(build_document(build_name));
      return 0;
    }
    if (verify->parsed()) {
      auto names = kleinmap::suite_names();
      if (std::find(names.begin(), names.end(), verify_suite) == names.end()) {
        std::cerr << "unknown verify suite: " << verify_suite << "\n";
        return 2;
      }
      return cmd_verify(verify_suite, corrupt, quiet, argv[0]);
    }
    if (exp->parsed()) {
      if (export_format != "json" && export_format != "dot") {
        std::cerr << "unknown export format: " << export_format << "\n";
        return 2;
      }
      auto doc = build_document(export_name);
      if (export_format == "json") {
        std::cout << kleinmap::to_json(doc);
      } else {
        std::string dot_name = export_name;
        std::replace(dot_name.begin(), dot_name.end(), '-', '_');
        std::cout << kleinmap::to_dot(doc, dot_name);
      }
      return 0;
    }
    if (ooa->parsed()) {
      if (ooa_solve && ooa_fixture) {
        std::cerr << "--solve and --fixture are mutually exclusive\n";
        return 2;
      }
      return cmd_ooa(ooa_solve);
    }
    if (zipcmd->parsed()) return cmd_zip();
    if (color->parsed()) return cmd_color(color_name);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
