#include "kleinmap/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace kleinmap {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

std::string join(const std::set<int>& v) {
  return join(std::vector<int>(v.begin(), v.end()));
}

}  // namespace

std::string IntersectionArray::str() const {
  return "{" + join(b) + ";" + join(c) + "}";
}

std::string WeaklyRegularParams::str() const {
  return "(" + std::to_string(order) + ",(" + join(degrees) + "),(" + join(lambda_set) +
         "),(" + join(mu_set) + "))";
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, std::numeric_limits<int>::max()));
  for (int s = 0; s < n; ++s) {
    auto& row = dist[s];
    row[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (row[w] == std::numeric_limits<int>::max()) {
          row[w] = row[v] + 1;
          q.push(w);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (row[v] == std::numeric_limits<int>::max())
        throw std::runtime_error("graph is disconnected");
  }
  return dist;
}

int diameter(const Graph& g) {
  auto dist = distance_matrix(g);
  int d = 0;
  for (const auto& row : dist)
    for (int x : row) d = std::max(d, x);
  return d;
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  int degree = 0;
  if (g.order() == 0 || !g.is_connected() || !g.is_regular(&degree)) return std::nullopt;
  auto dist = distance_matrix(g);
  int d = 0;
  for (const auto& row : dist)
    for (int x : row) d = std::max(d, x);
  if (d == 0) return std::nullopt;

  std::vector<int> b(d, -1), c(d + 1, -1);
  for (int v = 0; v < g.order(); ++v) {
    for (int u = 0; u < g.order(); ++u) {
      int i = dist[v][u];
      int up = 0, down = 0;
      for (int w : g.neighbors(u)) {
        if (dist[v][w] == i + 1) ++up;
        if (dist[v][w] == i - 1) ++down;
      }
      if (i < d) {
        if (b[i] == -1) b[i] = up;
        else if (b[i] != up) return std::nullopt;
      } else if (up != 0) {
        return std::nullopt;
      }
      if (i > 0) {
        if (c[i] == -1) c[i] = down;
        else if (c[i] != down) return std::nullopt;
      }
    }
  }
  IntersectionArray ia;
  ia.b = b;
  ia.c = std::vector<int>(c.begin() + 1, c.end());
  return ia;
}

WeaklyRegularParams weakly_regular_params(const Graph& g) {
  WeaklyRegularParams w;
  w.order = g.order();
  for (int v = 0; v < g.order(); ++v) w.degrees.insert(g.degree(v));
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      int common = 0;
      for (int x : g.neighbors(u))
        if (g.adjacent(x, v)) ++common;
      (g.adjacent(u, v) ? w.lambda_set : w.mu_set).insert(common);
    }
  }
  return w;
}

}  // namespace kleinmap
