#include "kleinmap/cycles.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace kleinmap {

namespace {

// BFS hop distances from src, ignoring one optional forbidden edge.
std::vector<int> bfs_dist(const Graph& g, int src, int skip_u = -1, int skip_v = -1) {
  std::vector<int> dist(g.order(), std::numeric_limits<int>::max());
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if ((v == skip_u && w == skip_v) || (v == skip_v && w == skip_u)) continue;
      if (dist[w] == std::numeric_limits<int>::max()) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

PathCopy canonical_path(std::vector<int> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("a path copy needs at least 2 vertices");
  if (vertices.front() > vertices.back()) std::reverse(vertices.begin(), vertices.end());
  return PathCopy{std::move(vertices)};
}

CycleCopy canonical_cycle(std::vector<int> vertices) {
  const int len = static_cast<int>(vertices.size());
  if (len < 3) throw std::invalid_argument("a cycle copy needs at least 3 vertices");
  int k = static_cast<int>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  int prev = vertices[(k + len - 1) % len];
  int next = vertices[(k + 1) % len];
  std::vector<int> out(len);
  if (next <= prev) {
    for (int i = 0; i < len; ++i) out[i] = vertices[(k + i) % len];
  } else {
    for (int i = 0; i < len; ++i) out[i] = vertices[(k - i + len * 2) % len];
  }
  return CycleCopy{std::move(out)};
}

bool is_path_of(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.size() < 2) return false;
  std::vector<bool> seen(g.order(), false);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_cycle_of(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.size() < 3) return false;
  return is_path_of(g, vertices) && g.adjacent(vertices.back(), vertices.front());
}

std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (auto [u, v] : g.edges()) {
    auto dist = bfs_dist(g, u, u, v);
    if (dist[v] != std::numeric_limits<int>::max()) best = std::min(best, dist[v] + 1);
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::vector<CycleCopy> enumerate_cycles(const Graph& g, int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be >= 3");
  std::vector<CycleCopy> out;
  const int n = g.order();
  std::vector<int> path;
  std::vector<bool> used(n, false);

  for (int s = 0; s < n; ++s) {
    // Cycles whose minimum vertex is s; all other vertices exceed s.
    auto dist = bfs_dist(g, s);
    path.assign(1, s);
    used.assign(n, false);
    used[s] = true;

    auto extend = [&](auto&& self, int v) -> void {
      int depth = static_cast<int>(path.size());
      if (depth == length) {
        if (g.adjacent(v, s) && path[1] < path.back()) out.push_back(CycleCopy{path});
        return;
      }
      for (int w : g.neighbors(v)) {
        if (w <= s || used[w]) continue;
        if (dist[w] > length - depth) continue;  // cannot close in time
        used[w] = true;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        used[w] = false;
      }
    };
    extend(extend, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathCopy> enumerate_paths(const Graph& g, int m) {
  if (m < 2) throw std::invalid_argument("path size must be >= 2 vertices");
  std::vector<PathCopy> out;
  const int n = g.order();
  std::vector<int> path;
  std::vector<bool> used(n, false);

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    used.assign(n, false);
    used[s] = true;
    auto extend = [&](auto&& self, int v) -> void {
      if (static_cast<int>(path.size()) == m) {
        if (path.front() < path.back()) out.push_back(PathCopy{path});
        return;
      }
      for (int w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = true;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        used[w] = false;
      }
    };
    extend(extend, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kleinmap
