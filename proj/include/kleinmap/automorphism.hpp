#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kleinmap/graph.hpp"

namespace kleinmap {

using Permutation = std::vector<int>;

Permutation identity_permutation(int degree);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer∘inner
Permutation inverse(const Permutation& p);

// A fully enumerated permutation group acting on {0,...,degree-1}.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> elements;  // sorted lexicographically; contains identity

  size_t size() const { return elements.size(); }
};

// Complete automorphism group by distance-profile partition pruning plus
// backtracking.  Guarded against inputs beyond full-enumeration scale.
PermGroup automorphism_group(const Graph& g, int order_guard = 512);

// A vertex bijection mapping edges exactly onto edges, or nullopt.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

// An automorphism of g agreeing with the given (vertex, image) pairs, or
// nullopt after exhaustive search.  Inconsistent partial maps are rejected.
std::optional<Permutation> extend_partial(const Graph& g,
                                          const std::vector<std::pair<int, int>>& partial);

// Number of orbits of the componentwise action on the given tuples.
int orbit_count(const PermGroup& grp, const std::vector<std::vector<int>>& tuples);

// All s-arcs: walks of s edges without immediate reversal, as vertex tuples.
std::vector<std::vector<int>> enumerate_s_arcs(const Graph& g, int s);

// Largest s with a single orbit on s-arcs; 0 if not arc-transitive.
// Requires a connected vertex-transitive graph of minimum degree >= 3.
int arc_transitivity_degree(const Graph& g);
int arc_transitivity_degree(const Graph& g, const PermGroup& aut);

}  // namespace kleinmap
