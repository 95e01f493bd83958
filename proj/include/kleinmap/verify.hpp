#pragma once

#include <string>
#include <vector>

namespace kleinmap {

// One pass/fail line of a verification report.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  bool corrupt_fixture = false;  // test mode: reverse fixture cycle 0
  std::string cli_path;          // enables the exit-code contract probes
};

// Check packs, one per acceptance criterion.
std::vector<Check> criterion_coxeter_parameters();
std::vector<Check> criterion_heawood_parameters();
std::vector<Check> criterion_cross_construction();
std::vector<Check> criterion_fastening();
std::vector<Check> criterion_ooa(const VerifyOptions& opt = {});
std::vector<Check> criterion_zip_topology(const VerifyOptions& opt = {});
std::vector<Check> criterion_klein_graph();
std::vector<Check> criterion_hypohamiltonicity();
std::vector<Check> criterion_theorem3();
std::vector<Check> criterion_dual_quartic();
std::vector<Check> criterion_petrie_dual_map();
std::vector<Check> criterion_property_suite(const VerifyOptions& opt = {});

// Themed extras beyond the numbered criteria.
std::vector<Check> checks_fano_coloring();
std::vector<Check> checks_heawood_fastening();

struct SuiteReport {
  std::string subject;
  std::vector<Check> checks;
  bool passed = true;
};

// name in {coxeter, heawood, klein, map, all}; throws on anything else.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});
const std::vector<std::string>& suite_names();

}  // namespace kleinmap
