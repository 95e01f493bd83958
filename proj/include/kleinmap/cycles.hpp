#pragma once

#include <optional>
#include <vector>

#include "kleinmap/graph.hpp"

namespace kleinmap {

// Undirected path copy.  Canonical form: endpoints ordered so that
// vertices.front() < vertices.back().
struct PathCopy {
  std::vector<int> vertices;

  bool operator==(const PathCopy& o) const { return vertices == o.vertices; }
  bool operator<(const PathCopy& o) const { return vertices < o.vertices; }
};

// Undirected cycle copy.  Canonical form: rotated to start at the minimum
// vertex, direction chosen so the second vertex is the smaller of the two
// cycle-neighbors of the first.
struct CycleCopy {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const CycleCopy& o) const { return vertices == o.vertices; }
  bool operator<(const CycleCopy& o) const { return vertices < o.vertices; }
};

PathCopy canonical_path(std::vector<int> vertices);
CycleCopy canonical_cycle(std::vector<int> vertices);

// True iff the sequence is a genuine (chord-agnostic) cycle/path of g:
// consecutive vertices adjacent, all distinct, cycle closes up.
bool is_cycle_of(const Graph& g, const std::vector<int>& vertices);
bool is_path_of(const Graph& g, const std::vector<int>& vertices);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// All cycles of exactly the given length, canonicalized, lexicographically
// sorted.  length must be >= 3.
std::vector<CycleCopy> enumerate_cycles(const Graph& g, int length);

// All paths on exactly m vertices, canonicalized, sorted.  m must be >= 2.
std::vector<PathCopy> enumerate_paths(const Graph& g, int m);

}  // namespace kleinmap
