#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinmap/cycles.hpp"
#include "kleinmap/graph.hpp"

namespace kleinmap {

// Label i^j of an oriented girth cycle, i in {0..7}, j in {1,2,3}.
struct CycleLabel {
  int i = 0;
  int j = 0;

  std::string str() const { return std::to_string(i) + "^" + std::to_string(j); }
  bool operator==(const CycleLabel& o) const { return i == o.i && j == o.j; }
};

// A choice of direction for each girth cycle.  labels is either empty or
// aligned with cycles.
struct OrientedCycleSet {
  std::vector<std::vector<int>> cycles;
  std::vector<CycleLabel> labels;

  int size() const { return static_cast<int>(cycles.size()); }
};

// The 24 oriented 7-cycles of the Coxeter graph, in census vertex numbering,
// labeled 0^1 .. 7^3.
OrientedCycleSet paper_ooa_fixture();

// The directed cycle visiting every second vertex.  Odd length only.
std::vector<int> square_cycle(const std::vector<int>& cycle);

struct OoaSolveResult {
  OrientedCycleSet set;
  std::vector<int> component;  // constraint-graph component per cycle
  int component_count = 0;
};

// Orient each cycle so the two cycles through every shared path on k vertices
// traverse it oppositely.  Parity constraints, one boolean per cycle; the
// lexicographically least assignment (smallest cycle index of each component
// keeps its enumerated direction).  nullopt when the constraints are odd.
// Throws if some k-vertex sub-path lies in more than 2 cycles.
std::optional<OoaSolveResult> solve_ooa(const Graph& g,
                                        const std::vector<CycleCopy>& cycles, int k);

// Number of shared k-vertex sub-paths traversed in the same direction by
// their two cycles (0 for a valid assignment).
int count_ooa_violations(const Graph& g, const OrientedCycleSet& ooa, int k);

}  // namespace kleinmap
