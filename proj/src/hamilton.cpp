#include "kleinmap/hamilton.hpp"

#include <algorithm>

namespace kleinmap {

namespace {

struct HamSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t steps = 0;
  std::vector<int> path;
  std::vector<bool> visited;
  std::vector<int> stack;  // scratch for the connectivity probe

  HamSearch(const Graph& g_, std::uint64_t budget_) : g(g_), budget(budget_) {
    visited.assign(g.order(), false);
  }

  // Every unvisited vertex still needs two usable path slots; slots are
  // unvisited neighbors plus the live endpoints (current end, start 0).
  bool degrees_ok(int end) const {
    int start_free = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (visited[v]) continue;
      int avail = 0;
      for (int w : g.neighbors(v)) {
        if (!visited[w] || w == end || w == 0) ++avail;
      }
      if (avail < 2) return false;
      if (g.adjacent(0, v)) ++start_free;
    }
    return start_free >= 1 || path.size() == static_cast<size_t>(g.order());
  }

  // The unvisited region plus the current end must be one connected piece.
  bool connected_ok(int end) {
    int remaining = g.order() - static_cast<int>(path.size());
    if (remaining == 0) return true;
    std::vector<bool> seen(g.order(), false);
    stack.clear();
    stack.push_back(end);
    seen[end] = true;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (seen[w] || (visited[w] && w != end)) continue;
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == remaining;
  }

  bool rec(int v) {
    if (++steps > budget) throw BudgetExceeded("hamiltonian search budget exceeded");
    if (path.size() == static_cast<size_t>(g.order())) return g.adjacent(v, 0);
    if (!degrees_ok(v) || !connected_ok(v)) return false;
    for (int w : g.neighbors(v)) {
      if (visited[w]) continue;
      visited[w] = true;
      path.push_back(w);
      if (rec(w)) return true;
      path.pop_back();
      visited[w] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g, std::uint64_t step_budget) {
  if (g.order() < 3) throw std::invalid_argument("hamiltonian search needs n >= 3");
  if (!g.is_connected()) return std::nullopt;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) return std::nullopt;
  HamSearch s(g, step_budget);
  s.visited[0] = true;
  s.path.push_back(0);
  if (s.rec(0)) return s.path;
  return std::nullopt;
}

bool is_hypohamiltonian(const Graph& g, std::uint64_t step_budget) {
  if (hamiltonian_cycle(g, step_budget)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!hamiltonian_cycle(g.without_vertex(v), step_budget)) return false;
  return true;
}

}  // namespace kleinmap
