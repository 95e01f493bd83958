#include "kleinmap/fano.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinmap {

namespace {

// third[a][b] = remaining point of the line through a and b (1-based).
std::array<std::array<int, 8>, 8> third_table(const FanoPlane& f) {
  std::array<std::array<int, 8>, 8> t{};
  for (const auto& line : f.lines) {
    t[line[0]][line[1]] = t[line[1]][line[0]] = line[2];
    t[line[0]][line[2]] = t[line[2]][line[0]] = line[1];
    t[line[1]][line[2]] = t[line[2]][line[1]] = line[0];
  }
  return t;
}

struct FanoSearch {
  const Graph& g;
  FanoPlane fano = build_fano();
  std::array<std::array<int, 8>, 8> third = third_table(fano);
  std::vector<int> color;   // vertex colors, 0 = unassigned
  std::vector<int> order;   // BFS assignment order
  std::uint64_t found = 0;
  std::uint64_t cap = 1;
  std::vector<int> first_solution;

  explicit FanoSearch(const Graph& g_) : g(g_), color(g_.order(), 0) {
    std::vector<bool> placed(g.order(), false);
    for (int s = 0; s < g.order(); ++s) {
      if (placed[s]) continue;
      std::vector<int> queue{s};
      placed[s] = true;
      for (size_t i = 0; i < queue.size(); ++i) {
        order.push_back(queue[i]);
        for (int w : g.neighbors(queue[i]))
          if (!placed[w]) {
            placed[w] = true;
            queue.push_back(w);
          }
      }
    }
  }

  // Admissibility of color c at v against already-colored vertices:
  // endpoints of an edge must differ (so the derived edge color exists) and
  // the three neighbors of any vertex must be pairwise distinct.
  bool admissible(int v, int c) const {
    for (int u : g.neighbors(v)) {
      if (color[u] == c) return false;
      for (int w : g.neighbors(u))
        if (w != v && color[w] == c) return false;
    }
    // Whenever a vertex u (v itself or a neighbor) becomes fully decided,
    // its three incident edge colors must form a line avoiding color(u).
    auto closed_vertex_ok = [&](int u, int cv) {
      std::array<int, 3> e{};
      int idx = 0;
      for (int w : g.neighbors(u)) {
        int cw = w == v ? c : color[w];
        if (cw == 0) return true;  // not decided yet
        e[idx++] = third[cv][cw];
      }
      if (idx != 3) return true;  // non-cubic vertices carry no line constraint
      if (!fano.is_line(e[0], e[1], e[2])) return false;
      return e[0] != cv && e[1] != cv && e[2] != cv;
    };
    if (!closed_vertex_ok(v, c)) return false;
    for (int u : g.neighbors(v))
      if (color[u] != 0 && !closed_vertex_ok(u, color[u])) return false;
    return true;
  }

  bool rec(size_t depth) {
    if (depth == order.size()) {
      if (found == 0) first_solution = color;
      return ++found >= cap;
    }
    int v = order[depth];
    for (int c = 1; c <= 7; ++c) {
      if (!admissible(v, c)) continue;
      color[v] = c;
      if (rec(depth + 1)) return true;
      color[v] = 0;
    }
    return false;
  }
};

}  // namespace

bool FanoPlane::is_line(int a, int b, int c) const {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return std::find(lines.begin(), lines.end(), t) != lines.end();
}

int FanoPlane::third_point(int a, int b) const {
  if (a == b || a < 1 || a > 7 || b < 1 || b > 7)
    throw std::invalid_argument("third_point needs two distinct points of J7");
  for (const auto& line : lines) {
    bool has_a = std::find(line.begin(), line.end(), a) != line.end();
    bool has_b = std::find(line.begin(), line.end(), b) != line.end();
    if (has_a && has_b)
      for (int p : line)
        if (p != a && p != b) return p;
  }
  throw std::logic_error("Fano pair without a line");
}

std::vector<std::array<int, 3>> FanoPlane::lines_through(int p) const {
  std::vector<std::array<int, 3>> out;
  for (const auto& line : lines)
    if (std::find(line.begin(), line.end(), p) != line.end()) out.push_back(line);
  return out;
}

FanoPlane build_fano() {
  FanoPlane f;
  const std::array<std::array<int, 3>, 7> raw{{{1, 2, 4},
                                               {2, 3, 5},
                                               {3, 4, 6},
                                               {4, 5, 7},
                                               {5, 6, 1},
                                               {6, 7, 2},
                                               {7, 1, 3}}};
  for (size_t i = 0; i < raw.size(); ++i) {
    f.lines[i] = raw[i];
    std::sort(f.lines[i].begin(), f.lines[i].end());
  }
  return f;
}

std::optional<FanoColoring> find_fano_coloring(const Graph& g) {
  FanoSearch s(g);
  s.cap = 1;
  s.rec(0);
  if (s.found == 0) return std::nullopt;

  FanoColoring coloring;
  coloring.vertex_color = s.first_solution;
  for (auto [u, v] : g.edges())
    coloring.edge_color.push_back(s.third[coloring.vertex_color[u]][coloring.vertex_color[v]]);
  return coloring;
}

std::uint64_t count_fano_colorings(const Graph& g, std::uint64_t cap) {
  FanoSearch s(g);
  s.cap = cap;
  s.rec(0);
  return s.found;
}

bool check_fano_coloring(const Graph& g, const FanoColoring& coloring) {
  if (static_cast<int>(coloring.vertex_color.size()) != g.order()) return false;
  auto edges = g.edges();
  if (coloring.edge_color.size() != edges.size()) return false;
  FanoPlane fano = build_fano();

  // (b) edge color + endpoint colors form a line.
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (!fano.is_line(coloring.edge_color[i], coloring.vertex_color[u],
                      coloring.vertex_color[v]))
      return false;
  }
  // (a) incident edge colors form a line; with the vertex color, 4 points.
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> incident;
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].first == v || edges[i].second == v) incident.push_back(coloring.edge_color[i]);
    if (incident.size() != 3) return false;
    if (!fano.is_line(incident[0], incident[1], incident[2])) return false;
    incident.push_back(coloring.vertex_color[v]);
    std::sort(incident.begin(), incident.end());
    if (std::unique(incident.begin(), incident.end()) != incident.end()) return false;
  }
  return true;
}

}  // namespace kleinmap
