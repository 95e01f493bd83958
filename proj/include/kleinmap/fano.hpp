#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kleinmap/graph.hpp"

namespace kleinmap {

// The 7-point projective plane with point set {1,...,7} and the cyclic line
// set 124, 235, 346, 457, 561, 672, 713.
struct FanoPlane {
  std::array<std::array<int, 3>, 7> lines;  // each ascending, listed order fixed

  bool is_line(int a, int b, int c) const;
  // The third point of the unique line through two distinct points.
  int third_point(int a, int b) const;
  std::vector<std::array<int, 3>> lines_through(int p) const;
};

FanoPlane build_fano();

// Vertex and edge colors over {1,...,7} such that
//   (a) the three edge colors at each vertex form a line,
//   (b) each edge color plus its endpoint colors form a line,
// and vertex color + incident edge colors are always 4 distinct points.
struct FanoColoring {
  std::vector<int> vertex_color;  // size n
  std::vector<int> edge_color;    // aligned with Graph::edges()
};

// First solution of the constraint search over a cubic graph, deterministic;
// nullopt when unsatisfiable.
std::optional<FanoColoring> find_fano_coloring(const Graph& g);

// Total number of solutions (stops counting at cap).
std::uint64_t count_fano_colorings(const Graph& g, std::uint64_t cap);

bool check_fano_coloring(const Graph& g, const FanoColoring& coloring);

}  // namespace kleinmap
