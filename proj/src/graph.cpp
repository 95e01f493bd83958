#include "kleinmap/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace kleinmap {

Graph::Graph(int order) : n_(order) {
  if (order < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.resize(n_);
  matrix_.assign(n_, std::vector<bool>(n_, false));
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "edge");
  check_vertex(v, "edge");
  if (u == v) throw std::invalid_argument("loop edge rejected at vertex " + std::to_string(u));
  if (matrix_[u][v]) throw std::invalid_argument("duplicate edge rejected");
  matrix_[u][v] = matrix_[v][u] = true;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(n_);
  for (int v = 0; v < n_; ++v) deg[v] = degree(v);
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool Graph::is_regular(int* degree_out) const {
  if (n_ == 0) return true;
  int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == n_;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj_[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v, "deleted");
  Graph g(n_ - 1);
  auto remap = [v](int w) { return w < v ? w : w - 1; };
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    for (int w : adj_[u])
      if (w != v && u < w) g.add_edge(remap(u), remap(w));
  }
  return g;
}

}  // namespace kleinmap
