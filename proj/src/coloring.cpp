#include "kleinmap/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "kleinmap/hamilton.hpp"  // BudgetExceeded

namespace kleinmap {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> mask(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbors(v)) mask[v] |= std::uint64_t{1} << w;
  return mask;
}

void clique_rec(const std::vector<std::uint64_t>& adj, std::uint64_t cand,
                std::vector<int>& cur, std::vector<int>& best) {
  if (cur.size() > best.size()) best = cur;
  while (cand) {
    if (cur.size() + static_cast<size_t>(__builtin_popcountll(cand)) <= best.size()) return;
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    cur.push_back(v);
    clique_rec(adj, cand & adj[v], cur, best);
    cur.pop_back();
  }
}

struct ColorSearch {
  const Graph& g;
  int k;
  std::uint64_t budget;
  std::uint64_t steps = 0;
  std::vector<int> color;                  // -1 uncolored
  std::vector<std::uint64_t> forbidden;    // bitmask of neighbor colors
  int colored = 0;
  int used_colors = 0;

  ColorSearch(const Graph& g_, int k_, std::uint64_t budget_)
      : g(g_), k(k_), budget(budget_), color(g_.order(), -1), forbidden(g_.order(), 0) {}

  void assign(int v, int c) {
    color[v] = c;
    ++colored;
    for (int w : g.neighbors(v)) forbidden[w] |= std::uint64_t{1} << c;
  }

  void unassign(int v, int c) {
    color[v] = -1;
    --colored;
    for (int w : g.neighbors(v)) {
      bool still = false;
      for (int x : g.neighbors(w))
        if (color[x] == c) {
          still = true;
          break;
        }
      if (!still) forbidden[w] &= ~(std::uint64_t{1} << c);
    }
  }

  // Most saturated uncolored vertex; ties broken by degree, then index.
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[v] != -1) continue;
      int sat = __builtin_popcountll(forbidden[v]);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool rec() {
    if (++steps > budget) throw BudgetExceeded("coloring search budget exceeded");
    if (colored == g.order()) return true;
    int v = pick();
    // A fresh color is only ever the next unused one; interchangeable colors
    // collapse to a single branch.
    int limit = std::min(k, used_colors + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden[v] & (std::uint64_t{1} << c)) continue;
      int prev_used = used_colors;
      used_colors = std::max(used_colors, c + 1);
      assign(v, c);
      if (rec()) return true;
      unassign(v, c);
      used_colors = prev_used;
    }
    return false;
  }
};

std::vector<int> greedy_dsatur(const Graph& g) {
  ColorSearch s(g, g.order() + 1, ~std::uint64_t{0});
  while (s.colored < g.order()) {
    int v = s.pick();
    int c = 0;
    while (s.forbidden[v] & (std::uint64_t{1} << c)) ++c;
    s.used_colors = std::max(s.used_colors, c + 1);
    s.assign(v, c);
  }
  return s.color;
}

}  // namespace

std::vector<int> max_clique(const Graph& g) {
  if (g.order() > 64) throw std::invalid_argument("max_clique guard: n <= 64");
  if (g.order() == 0) return {};
  auto adj = adjacency_masks(g);
  std::vector<int> cur, best;
  std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << g.order()) - 1;
  clique_rec(adj, all, cur, best);
  std::sort(best.begin(), best.end());
  return best;
}

std::optional<std::vector<int>> k_coloring(const Graph& g, int k, std::uint64_t step_budget) {
  if (g.order() > 64) throw std::invalid_argument("coloring guard: n <= 64");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (g.order() == 0) return std::vector<int>{};
  if (k == 0) return std::nullopt;

  ColorSearch s(g, k, step_budget);
  auto clique = max_clique(g);
  if (static_cast<int>(clique.size()) > k) return std::nullopt;
  for (size_t i = 0; i < clique.size(); ++i) s.assign(clique[i], static_cast<int>(i));
  s.used_colors = static_cast<int>(clique.size());
  if (s.rec()) return s.color;
  return std::nullopt;
}

int chromatic_number(const Graph& g, std::uint64_t step_budget) {
  if (g.order() > 64) throw std::invalid_argument("chromatic_number guard: n <= 64");
  if (g.order() == 0) return 0;
  if (g.edge_count() == 0) return 1;

  int lower = static_cast<int>(max_clique(g).size());
  auto greedy = greedy_dsatur(g);
  int upper = 1 + *std::max_element(greedy.begin(), greedy.end());

  int best = upper;
  for (int k = upper - 1; k >= lower; --k) {
    if (k_coloring(g, k, step_budget))
      best = k;
    else
      break;
  }
  return best;
}

}  // namespace kleinmap
