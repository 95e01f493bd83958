#include "kleinmap/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace kleinmap {

namespace {

// Per-vertex isomorphism invariant: sorted BFS distance row, with unreachable
// vertices mapped to order+1.  Preserved by every isomorphism, so it prunes
// the backtracking candidate sets.
std::vector<std::vector<int>> distance_profiles(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> prof(n);
  for (int s = 0; s < n; ++s) {
    std::vector<int> row(n, n + 1);
    row[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (row[w] == n + 1) {
          row[w] = row[v] + 1;
          q.push(w);
        }
    }
    std::sort(row.begin(), row.end());
    prof[s] = std::move(row);
  }
  return prof;
}

struct MapSearch {
  const Graph& g;
  const Graph& h;
  std::vector<std::vector<int>> gprof, hprof;
  std::vector<int> order;  // g vertices in assignment order (seeds first)
  std::vector<int> img;    // g -> h, -1 when unmapped
  std::vector<bool> used;  // image taken in h
  bool find_all = false;
  std::vector<Permutation> results;

  MapSearch(const Graph& g_, const Graph& h_)
      : g(g_), h(h_), gprof(distance_profiles(g_)), hprof(distance_profiles(h_)),
        img(g_.order(), -1), used(h_.order(), false) {}

  // Assignment order: repeatedly take the unplaced vertex with the most
  // already-placed neighbors (ties to the smallest index), so the partial map
  // stays maximally constrained.
  void build_order(const std::vector<int>& seeds) {
    const int n = g.order();
    std::vector<bool> placed(n, false);
    order = seeds;
    for (int v : seeds) placed[v] = true;
    while (static_cast<int>(order.size()) < n) {
      int best = -1, best_score = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int score = 0;
        for (int w : g.neighbors(v))
          if (placed[w]) ++score;
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  bool consistent(int v, int w, int depth) const {
    if (gprof[v] != hprof[w]) return false;
    for (int j = 0; j < depth; ++j) {
      int pv = order[j];
      if (g.adjacent(v, pv) != h.adjacent(w, img[pv])) return false;
    }
    return true;
  }

  // Returns true to stop the search (first hit found, find_all == false).
  bool rec(int depth) {
    if (depth == static_cast<int>(order.size())) {
      results.push_back(img);
      return !find_all;
    }
    int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
      if (used[w] || !consistent(v, w, depth)) continue;
      img[v] = w;
      used[w] = true;
      bool stop = rec(depth + 1);
      img[v] = -1;
      used[w] = false;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation p(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) p[i] = outer[inner[i]];
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

PermGroup automorphism_group(const Graph& g, int order_guard) {
  if (g.order() > order_guard)
    throw std::invalid_argument("automorphism_group: order exceeds enumeration guard");
  MapSearch s(g, g);
  s.find_all = true;
  s.build_order({});
  s.rec(0);
  std::sort(s.results.begin(), s.results.end());
  return PermGroup{g.order(), std::move(s.results)};
}

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
  MapSearch s(g, h);
  auto gp = s.gprof, hp = s.hprof;
  std::sort(gp.begin(), gp.end());
  std::sort(hp.begin(), hp.end());
  if (gp != hp) return std::nullopt;
  s.build_order({});
  s.rec(0);
  if (s.results.empty()) return std::nullopt;
  return s.results.front();
}

std::optional<Permutation> extend_partial(const Graph& g,
                                          const std::vector<std::pair<int, int>>& partial) {
  const int n = g.order();
  std::vector<int> seed_img(n, -1);
  std::vector<bool> taken(n, false);
  for (auto [v, w] : partial) {
    if (v < 0 || v >= n || w < 0 || w >= n)
      throw std::invalid_argument("extend_partial: vertex out of range");
    if (seed_img[v] != -1 && seed_img[v] != w)
      throw std::invalid_argument("extend_partial: conflicting images for one vertex");
    if (seed_img[v] == -1 && taken[w])
      throw std::invalid_argument("extend_partial: partial map is not injective");
    seed_img[v] = w;
    taken[w] = true;
  }
  for (auto [a, pa] : partial)
    for (auto [b, pb] : partial)
      if (g.adjacent(a, b) != g.adjacent(pa, pb))
        throw std::invalid_argument("extend_partial: partial map breaks an edge/non-edge");

  MapSearch s(g, g);
  std::vector<int> seeds;
  for (int v = 0; v < n; ++v)
    if (seed_img[v] != -1) seeds.push_back(v);
  // Seeds that break the distance profile cannot extend; that is a "none",
  // not a contract violation.
  for (int v : seeds)
    if (s.gprof[v] != s.hprof[seed_img[v]]) return std::nullopt;
  s.build_order(seeds);
  for (int v : seeds) {
    s.img[v] = seed_img[v];
    s.used[seed_img[v]] = true;
  }
  s.rec(static_cast<int>(seeds.size()));
  if (s.results.empty()) return std::nullopt;
  return s.results.front();
}

int orbit_count(const PermGroup& grp, const std::vector<std::vector<int>>& tuples) {
  std::map<std::vector<int>, int> index;
  for (const auto& t : tuples) index.emplace(t, static_cast<int>(index.size()));

  std::vector<int> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<int> image;
  for (const auto& perm : grp.elements) {
    for (const auto& [t, id] : index) {
      image.clear();
      for (int v : t) image.push_back(perm[v]);
      auto it = index.find(image);
      if (it == index.end()) continue;
      int a = find(id), b = find(it->second);
      if (a != b) parent[a] = b;
    }
  }
  int orbits = 0;
  for (size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++orbits;
  return orbits;
}

std::vector<std::vector<int>> enumerate_s_arcs(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("s-arc length must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> walk;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == s + 1) {
      out.push_back(walk);
      return;
    }
    int v = walk.back();
    int prev = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
    for (int w : g.neighbors(v)) {
      if (w == prev) continue;  // no immediate reversal
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (int v = 0; v < g.order(); ++v) {
    walk.assign(1, v);
    extend(extend);
  }
  return out;
}

int arc_transitivity_degree(const Graph& g) {
  return arc_transitivity_degree(g, automorphism_group(g));
}

int arc_transitivity_degree(const Graph& g, const PermGroup& aut) {
  if (!g.is_connected()) throw std::invalid_argument("arc-transitivity needs a connected graph");
  int min_degree = g.order() ? g.degree(0) : 0;
  for (int v = 0; v < g.order(); ++v) min_degree = std::min(min_degree, g.degree(v));
  if (min_degree < 3)
    throw std::invalid_argument("arc-transitivity degree is unbounded below degree 3");
  std::vector<std::vector<int>> verts;
  for (int v = 0; v < g.order(); ++v) verts.push_back({v});
  if (orbit_count(aut, verts) != 1)
    throw std::invalid_argument("arc-transitivity needs a vertex-transitive graph");

  int k = 0;
  for (int s = 1;; ++s) {
    auto arcs = enumerate_s_arcs(g, s);
    if (arcs.empty() || arcs.size() > aut.size()) break;  // transitivity impossible
    if (orbit_count(aut, arcs) != 1) break;
    k = s;
  }
  return k;
}

}  // namespace kleinmap
