#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinmap/automorphism.hpp"
#include "kleinmap/graph.hpp"
#include "kleinmap/metrics.hpp"

namespace kleinmap {

// Fano point-line incidence graph: vertices 0..6 are points 1..7,
// vertices 7..13 are the lines in listed order.  14 vertices, 21 edges.
Graph build_heawood();

// Three heptagons (step 1, 2 and 3) joined by seven stars.
// Vertex numbering: u_x -> x, z_x -> 7+x, v_x -> 14+x, t_x -> 21+x.
Graph build_coxeter();
std::string coxeter_vertex_name(int v);  // "u3", "z0", ...

// Same graph rebuilt from the 28 six-cycles of the Heawood graph, adjacent
// iff disjoint.  Throws if the result fails to be cubic (enumeration bug).
Graph build_coxeter_from_heawood();

enum class Hamiltonicity { hamiltonian, hypohamiltonian, non_hamiltonian };
std::string to_string(Hamiltonicity h);

// The full parameter tuple of one graph; every field is computed, never
// copied from an expectation.
struct InvariantReport {
  int order = 0;
  std::vector<int> degrees;  // distinct values, ascending
  int diameter = 0;
  int girth = 0;
  int arc_transitivity = 0;
  int girth_cycle_count = 0;
  std::size_t automorphism_count = 0;
  std::optional<IntersectionArray> intersection;
  WeaklyRegularParams weakly_regular;
  Hamiltonicity hamiltonicity = Hamiltonicity::non_hamiltonian;
};

InvariantReport invariant_report(const Graph& g);

}  // namespace kleinmap
