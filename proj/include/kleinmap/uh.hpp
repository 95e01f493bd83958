#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinmap/automorphism.hpp"
#include "kleinmap/cycles.hpp"
#include "kleinmap/graph.hpp"
#include "kleinmap/ooa.hpp"

namespace kleinmap {

// How many OTHER cycles of the set contain each m-vertex sub-path of each
// cycle; uniform_ell is set iff the count is the same everywhere.
struct FasteningResult {
  int subpath_size = 0;
  std::map<std::pair<int, int>, int> per_window_counts;  // (cycle, window start) -> count
  std::optional<int> uniform_ell;
};

FasteningResult fastening_numbers(const Graph& g, const std::vector<CycleCopy>& cycles, int m);

// Strong-fastening chain check: at step i (1-based) of the descending chain
// of sub-path sizes (ending at 2) the fastening number must be 2^i - 1.
bool sf_uh_check(const Graph& g, const std::vector<CycleCopy>& cycles,
                 const std::vector<int>& chain);

struct UHWitness {
  int copy_a = 0;
  int copy_b = 0;
  int correspondence = 0;
  std::string detail;
};

struct UHVerdict {
  bool holds = true;
  std::optional<UHWitness> witness;
};

// Every isomorphism between two induced copies (all ordered pairs, including
// a copy with itself, under every template self-correspondence) must extend
// to an automorphism.  Extension is tested against the full group.
UHVerdict cuh_graph_check(const Graph& g, const std::vector<CycleCopy>& copies,
                          const PermGroup* aut = nullptr);
UHVerdict cuh_graph_check(const Graph& g, const std::vector<PathCopy>& copies,
                          const PermGroup* aut = nullptr);

// Directed tight-fastening check of an oriented cycle set:
//  (1) every (k-1)-arc of g appears in exactly one oriented cycle;
//  (2) for each cycle and each contained (k-1)-arc, exactly one other cycle
//      meets it in precisely that arc's vertices, with the arc reversed.
UHVerdict cuh_digraph_check(const Graph& g, const OrientedCycleSet& ooa, int k);

}  // namespace kleinmap
