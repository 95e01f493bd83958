#include "kleinmap/uh.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kleinmap {

namespace {

// Does the group contain an element realizing the given partial images?
bool group_extends(const PermGroup& aut, const std::vector<int>& from,
                   const std::vector<int>& to) {
  for (const auto& perm : aut.elements) {
    bool ok = true;
    for (size_t i = 0; i < from.size(); ++i)
      if (perm[from[i]] != to[i]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

void require_chordless_cycle(const Graph& g, const CycleCopy& c) {
  if (!is_cycle_of(g, c.vertices))
    throw std::invalid_argument("cuh check: copy is not a cycle of the graph");
  const int len = c.length();
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(c.vertices[i], c.vertices[j]))
        throw std::invalid_argument("cuh check: cycle copy is not induced (chord found)");
    }
}

void require_chordless_path(const Graph& g, const PathCopy& p) {
  if (!is_path_of(g, p.vertices))
    throw std::invalid_argument("cuh check: copy is not a path of the graph");
  const int len = static_cast<int>(p.vertices.size());
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j)
      if (g.adjacent(p.vertices[i], p.vertices[j]))
        throw std::invalid_argument("cuh check: path copy is not induced (chord found)");
}

}  // namespace

FasteningResult fastening_numbers(const Graph& g, const std::vector<CycleCopy>& cycles, int m) {
  if (cycles.empty()) throw std::invalid_argument("fastening_numbers: empty cycle set");
  for (const auto& c : cycles) {
    if (!is_cycle_of(g, c.vertices))
      throw std::invalid_argument("fastening_numbers: not a cycle of the graph");
    if (m < 2 || m > c.length())
      throw std::invalid_argument("fastening_numbers: sub-path size out of range");
  }

  // Occurrence count of every m-vertex window across the whole set.
  std::map<PathCopy, int> total;
  for (const auto& c : cycles) {
    const int len = c.length();
    for (int s = 0; s < len; ++s) {
      std::vector<int> w(m);
      for (int i = 0; i < m; ++i) w[i] = c.vertices[(s + i) % len];
      ++total[canonical_path(w)];
    }
  }

  FasteningResult r;
  r.subpath_size = m;
  std::set<int> values;
  for (size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto& c = cycles[ci];
    const int len = c.length();
    for (int s = 0; s < len; ++s) {
      std::vector<int> w(m);
      for (int i = 0; i < m; ++i) w[i] = c.vertices[(s + i) % len];
      int others = total[canonical_path(w)] - 1;
      r.per_window_counts[{static_cast<int>(ci), s}] = others;
      values.insert(others);
    }
  }
  if (values.size() == 1) r.uniform_ell = *values.begin();
  return r;
}

bool sf_uh_check(const Graph& g, const std::vector<CycleCopy>& cycles,
                 const std::vector<int>& chain) {
  if (chain.empty() || chain.back() != 2)
    throw std::invalid_argument("sf_uh_check: chain must end at 2 (a single edge)");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] != chain[i + 1] + 1)
      throw std::invalid_argument("sf_uh_check: chain must descend by one vertex per step");

  for (size_t i = 0; i < chain.size(); ++i) {
    auto fastening = fastening_numbers(g, cycles, chain[i]);
    int expected = (1 << (i + 1)) - 1;
    if (!fastening.uniform_ell || *fastening.uniform_ell != expected) return false;
  }
  return true;
}

UHVerdict cuh_graph_check(const Graph& g, const std::vector<CycleCopy>& copies,
                          const PermGroup* aut) {
  if (copies.empty()) throw std::invalid_argument("cuh_graph_check: empty copy set");
  const int len = copies.front().length();
  for (const auto& c : copies) {
    if (c.length() != len)
      throw std::invalid_argument("cuh_graph_check: copies of mixed length");
    require_chordless_cycle(g, c);
  }
  PermGroup local;
  if (!aut) {
    local = automorphism_group(g);
    aut = &local;
  }

  for (size_t a = 0; a < copies.size(); ++a) {
    const auto& A = copies[a].vertices;
    for (size_t b = 0; b < copies.size(); ++b) {
      const auto& B = copies[b].vertices;
      // Isomorphisms between chordless cycles: the dihedral correspondences.
      for (int corr = 0; corr < 2 * len; ++corr) {
        int rot = corr / 2;
        int dir = corr % 2 == 0 ? 1 : -1;
        std::vector<int> to(len);
        for (int i = 0; i < len; ++i)
          to[i] = B[((rot + dir * i) % len + len) % len];
        if (!group_extends(*aut, A, to)) {
          return {false,
                  UHWitness{static_cast<int>(a), static_cast<int>(b), corr,
                            "cycle correspondence (rotation " + std::to_string(rot) +
                                (dir > 0 ? ", forward" : ", reversed") + ") does not extend"}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

UHVerdict cuh_graph_check(const Graph& g, const std::vector<PathCopy>& copies,
                          const PermGroup* aut) {
  if (copies.empty()) throw std::invalid_argument("cuh_graph_check: empty copy set");
  const int len = static_cast<int>(copies.front().vertices.size());
  for (const auto& p : copies) {
    if (static_cast<int>(p.vertices.size()) != len)
      throw std::invalid_argument("cuh_graph_check: copies of mixed length");
    require_chordless_path(g, p);
  }
  PermGroup local;
  if (!aut) {
    local = automorphism_group(g);
    aut = &local;
  }

  for (size_t a = 0; a < copies.size(); ++a) {
    const auto& A = copies[a].vertices;
    for (size_t b = 0; b < copies.size(); ++b) {
      const auto& B = copies[b].vertices;
      for (int corr = 0; corr < 2; ++corr) {
        std::vector<int> to(len);
        for (int i = 0; i < len; ++i) to[i] = corr == 0 ? B[i] : B[len - 1 - i];
        if (!group_extends(*aut, A, to)) {
          return {false,
                  UHWitness{static_cast<int>(a), static_cast<int>(b), corr,
                            std::string("path correspondence (") +
                                (corr == 0 ? "forward" : "reversed") + ") does not extend"}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

UHVerdict cuh_digraph_check(const Graph& g, const OrientedCycleSet& ooa, int k) {
  if (k < 2) throw std::invalid_argument("cuh_digraph_check needs k >= 2");
  for (const auto& c : ooa.cycles)
    if (!is_cycle_of(g, c))
      throw std::invalid_argument("cuh_digraph_check: not a cycle of the graph");

  // (k-1)-arcs of g: directed paths on k distinct vertices.
  std::set<std::vector<int>> all_arcs;
  {
    std::vector<int> walk;
    std::vector<bool> used(g.order(), false);
    auto extend = [&](auto&& self, int v) -> void {
      if (static_cast<int>(walk.size()) == k) {
        all_arcs.insert(walk);
        return;
      }
      for (int w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = true;
        walk.push_back(w);
        self(self, w);
        walk.pop_back();
        used[w] = false;
      }
    };
    for (int v = 0; v < g.order(); ++v) {
      walk.assign(1, v);
      used.assign(g.order(), false);
      used[v] = true;
      extend(extend, v);
    }
  }

  // Condition (1): each such arc occurs in exactly one oriented cycle.
  std::map<std::vector<int>, int> occurrences;
  for (const auto& cyc : ooa.cycles) {
    const int len = static_cast<int>(cyc.size());
    for (int s = 0; s < len; ++s) {
      std::vector<int> w(k);
      for (int i = 0; i < k; ++i) w[i] = cyc[(s + i) % len];
      ++occurrences[w];
    }
  }
  for (const auto& arc : all_arcs) {
    auto it = occurrences.find(arc);
    int count = it == occurrences.end() ? 0 : it->second;
    if (count != 1) {
      std::string verts;
      for (int v : arc) verts += std::to_string(v) + " ";
      return {false,
              UHWitness{-1, -1, 0,
                        "arc (" + verts + ") suggested " + std::to_string(count) +
                            " times instead of once"}};
    }
  }
  if (occurrences.size() != all_arcs.size()) {
    return {false, UHWitness{-1, -1, 0, "oriented cycles contain a non-path window"}};
  }

  // Condition (2): tight fastening with reversed arcs.
  std::vector<std::set<int>> vertex_sets;
  std::vector<std::set<std::pair<int, int>>> arc_sets;
  for (const auto& cyc : ooa.cycles) {
    std::set<int> vs(cyc.begin(), cyc.end());
    std::set<std::pair<int, int>> as;
    const int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) as.emplace(cyc[i], cyc[(i + 1) % len]);
    vertex_sets.push_back(std::move(vs));
    arc_sets.push_back(std::move(as));
  }

  for (int c0 = 0; c0 < ooa.size(); ++c0) {
    const auto& cyc = ooa.cycles[c0];
    const int len = static_cast<int>(cyc.size());
    for (int s = 0; s < len; ++s) {
      std::set<int> mv;
      std::set<std::pair<int, int>> ma;
      for (int i = 0; i < k; ++i) mv.insert(cyc[(s + i) % len]);
      for (int i = 0; i + 1 < k; ++i) ma.emplace(cyc[(s + i) % len], cyc[(s + i + 1) % len]);

      int matches = 0;
      for (int c1 = 0; c1 < ooa.size(); ++c1) {
        if (c1 == c0) continue;
        // Vertex intersection must be exactly the arc's vertices.
        std::set<int> common;
        std::set_intersection(vertex_sets[c0].begin(), vertex_sets[c0].end(),
                              vertex_sets[c1].begin(), vertex_sets[c1].end(),
                              std::inserter(common, common.begin()));
        if (common != mv) continue;
        // Arcs of c0 reversed in c1 must be exactly the arc's arcs.
        std::set<std::pair<int, int>> reversed_shared;
        for (auto [x, y] : arc_sets[c0])
          if (arc_sets[c1].count({y, x})) reversed_shared.emplace(x, y);
        if (reversed_shared == ma) ++matches;
      }
      if (matches != 1) {
        return {false,
                UHWitness{c0, -1, s,
                          "window at position " + std::to_string(s) + " of cycle " +
                              std::to_string(c0) + " tightly fastened by " +
                              std::to_string(matches) + " cycles instead of 1"}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace kleinmap
