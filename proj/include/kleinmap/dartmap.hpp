#pragma once

#include <optional>
#include <vector>

#include "kleinmap/graph.hpp"
#include "kleinmap/ooa.hpp"

namespace kleinmap {

// One arc slot of one face polygon, as (cycle index, position).
struct Dart {
  int cycle = 0;
  int position = 0;
};

// An oriented surface embedding on darts: alpha is the fixed-point-free edge
// involution, phi the face successor.  The vertex permutation follows the
// fixed convention sigma = alpha ∘ phi, so a sigma orbit collects the darts
// pointing at one vertex.
class DartMap {
 public:
  DartMap(std::vector<int> alpha, std::vector<int> phi);

  int dart_count() const { return static_cast<int>(alpha_.size()); }
  int alpha(int d) const { return alpha_[d]; }
  int phi(int d) const { return phi_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inverse(int d) const { return sigma_inv_[d]; }

  int vertex_count() const { return vertex_orbit_count_; }
  int face_count() const { return face_orbit_count_; }
  int edge_count() const { return dart_count() / 2; }
  int vertex_of(int d) const { return vertex_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }

  std::vector<int> vertex_orbit_sizes() const;  // sorted ascending

  const std::vector<int>& alpha_perm() const { return alpha_; }
  const std::vector<int>& sigma_perm() const { return sigma_; }

 private:
  std::vector<int> alpha_, phi_, sigma_, sigma_inv_;
  std::vector<int> vertex_of_, face_of_;  // orbit ids by smallest dart
  int vertex_orbit_count_ = 0;
  int face_orbit_count_ = 0;
};

enum class ZipMode {
  square,  // darts carry the 2-arcs of the squared cycles (odd lengths only)
  direct,  // darts carry the arcs of the cycles themselves
};

// Glue the oriented cycle collection into a map: alpha pairs each dart with
// the unique dart of another cycle carrying the reversed tuple, phi walks
// each (squared) cycle.  Throws "pairing failure" on an invalid assignment.
DartMap zip(const OrientedCycleSet& ooa, ZipMode mode = ZipMode::square);

struct MapSummary {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
  std::vector<int> vertex_orbit_sizes;
};

// Orbit counts and the genus from V - E + F = 2 - 2g; throws when the Euler
// characteristic is odd (a corrupted map).
MapSummary map_summary(const DartMap& m);

// Vertices are sigma orbits, edges alpha orbits.  Throws on loops or
// parallel edges (the zipped maps here are always simple).
Graph underlying_graph(const DartMap& m);

// Vertices are faces, edges alpha orbits; nullopt when the dual has loops or
// parallel edges (reported, not a fault in general).
std::optional<Graph> dual_graph(const DartMap& m);

// Same darts with phi' = sigma; under the sigma = alpha ∘ phi convention the
// dual's vertex permutation is automatically the primal phi.
DartMap dual_map(const DartMap& m);

// Face boundaries as directed cycles of underlying-graph vertices, indexed
// like the zipped cycles.
std::vector<std::vector<int>> face_cycles(const DartMap& m);

// A closed zigzag walk: after each alpha crossing, sigma and its inverse are
// applied alternately.  Lengths are in edges.
struct PetriePolygon {
  std::vector<int> darts;

  int length() const { return static_cast<int>(darts.size()); }
};

// All Petrie polygons, one per reversal pair of zigzag state orbits.
std::vector<PetriePolygon> petrie_polygons(const DartMap& m);

// Colors the dual vertices (faces) with the label index i of each face's
// source cycle; throws if the coloring is not proper on the dual graph.
std::vector<int> vertex_color_dual(const DartMap& m, const std::vector<CycleLabel>& labels);

}  // namespace kleinmap
