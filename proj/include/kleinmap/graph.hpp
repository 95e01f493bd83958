#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kleinmap {

// One of the two oppositely oriented arcs carried by an undirected edge.
struct Arc {
  int tail = 0;
  int head = 0;

  Arc reversed() const { return {head, tail}; }
  bool operator==(const Arc& o) const { return tail == o.tail && head == o.head; }
  bool operator<(const Arc& o) const {
    return tail != o.tail ? tail < o.tail : head < o.head;
  }
};

// Finite simple undirected graph on the dense vertex set {0,...,n-1}.
// Immutable in spirit: build it with add_edge, then treat it as a value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool adjacent(int u, int v) const { return matrix_[u][v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Rejects loops and duplicate edges.
  void add_edge(int u, int v);

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> degree_sequence() const;  // ascending
  bool is_regular(int* degree_out = nullptr) const;
  bool is_connected() const;
  bool is_bipartite() const;

  // Copy with vertex v removed and the remaining vertices reindexed densely,
  // preserving relative order.
  Graph without_vertex(int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void check_vertex(int v, const char* what) const;

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;        // sorted neighbor lists
  std::vector<std::vector<bool>> matrix_;
};

}  // namespace kleinmap
