#include "kleinmap/dartmap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kleinmap {

namespace {

// Orbit ids in order of each orbit's smallest element.
int label_orbits(const std::vector<int>& perm, std::vector<int>& orbit_of) {
  const int n = static_cast<int>(perm.size());
  orbit_of.assign(n, -1);
  int count = 0;
  for (int d = 0; d < n; ++d) {
    if (orbit_of[d] != -1) continue;
    for (int e = d; orbit_of[e] == -1; e = perm[e]) orbit_of[e] = count;
    ++count;
  }
  return count;
}

void check_permutation(const std::vector<int>& p, const char* name) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x])
      throw std::invalid_argument(std::string(name) + " is not a permutation of the darts");
    seen[x] = true;
  }
}

}  // namespace

DartMap::DartMap(std::vector<int> alpha, std::vector<int> phi)
    : alpha_(std::move(alpha)), phi_(std::move(phi)) {
  if (alpha_.size() != phi_.size() || alpha_.empty())
    throw std::invalid_argument("dart map needs matching non-empty alpha and phi");
  if (alpha_.size() % 2 != 0)
    throw std::invalid_argument("dart count must be even");
  check_permutation(alpha_, "alpha");
  check_permutation(phi_, "phi");
  for (size_t d = 0; d < alpha_.size(); ++d) {
    if (alpha_[d] == static_cast<int>(d))
      throw std::invalid_argument("alpha has a fixed point");
    if (alpha_[alpha_[d]] != static_cast<int>(d))
      throw std::invalid_argument("alpha is not an involution");
  }
  sigma_.resize(alpha_.size());
  for (size_t d = 0; d < alpha_.size(); ++d) sigma_[d] = alpha_[phi_[d]];
  sigma_inv_.resize(sigma_.size());
  for (size_t d = 0; d < sigma_.size(); ++d) sigma_inv_[sigma_[d]] = static_cast<int>(d);
  vertex_orbit_count_ = label_orbits(sigma_, vertex_of_);
  face_orbit_count_ = label_orbits(phi_, face_of_);
}

std::vector<int> DartMap::vertex_orbit_sizes() const {
  std::vector<int> size(vertex_orbit_count_, 0);
  for (int d = 0; d < dart_count(); ++d) ++size[vertex_of_[d]];
  std::sort(size.begin(), size.end());
  return size;
}

DartMap zip(const OrientedCycleSet& ooa, ZipMode mode) {
  if (ooa.cycles.empty()) throw std::invalid_argument("zip: empty cycle set");
  std::vector<int> offset;
  int darts = 0;
  for (const auto& cyc : ooa.cycles) {
    const int len = static_cast<int>(cyc.size());
    if (len < 2) throw std::invalid_argument("zip: degenerate cycle");
    if (mode == ZipMode::square && len % 2 == 0)
      throw std::invalid_argument("zip: squaring rejects even cycles");
    offset.push_back(darts);
    darts += len;
  }

  // The tuple a dart stands for: an arc of the squared cycle remembers the
  // 2-arc it skipped; a direct arc is just itself.
  auto dart_tuple = [&](int c, int p) {
    const auto& cyc = ooa.cycles[c];
    const int len = static_cast<int>(cyc.size());
    std::vector<int> t;
    if (mode == ZipMode::square) {
      t = {cyc[(2 * p) % len], cyc[(2 * p + 1) % len], cyc[(2 * p + 2) % len]};
    } else {
      t = {cyc[p], cyc[(p + 1) % len]};
    }
    return t;
  };

  std::map<std::vector<int>, int> owner;
  for (int c = 0; c < ooa.size(); ++c) {
    const int len = static_cast<int>(ooa.cycles[c].size());
    for (int p = 0; p < len; ++p) {
      auto [it, fresh] = owner.emplace(dart_tuple(c, p), offset[c] + p);
      if (!fresh)
        throw std::runtime_error("pairing failure: a tuple appears in two darts");
    }
  }

  std::vector<int> alpha(darts, -1), phi(darts, -1);
  for (int c = 0; c < ooa.size(); ++c) {
    const int len = static_cast<int>(ooa.cycles[c].size());
    for (int p = 0; p < len; ++p) {
      int d = offset[c] + p;
      phi[d] = offset[c] + (p + 1) % len;
      auto tuple = dart_tuple(c, p);
      std::reverse(tuple.begin(), tuple.end());
      auto it = owner.find(tuple);
      if (it == owner.end())
        throw std::runtime_error("pairing failure: a dart has no reverse partner");
      if (it->second >= offset[c] && it->second < offset[c] + len)
        throw std::runtime_error("pairing failure: reverse partner inside the same cycle");
      alpha[d] = it->second;
    }
  }
  return DartMap(std::move(alpha), std::move(phi));
}

MapSummary map_summary(const DartMap& m) {
  MapSummary s;
  s.vertices = m.vertex_count();
  s.edges = m.edge_count();
  s.faces = m.face_count();
  s.vertex_orbit_sizes = m.vertex_orbit_sizes();
  int euler = s.vertices - s.edges + s.faces;
  if ((2 - euler) % 2 != 0 || euler > 2)
    throw std::runtime_error("corrupted map: Euler characteristic " + std::to_string(euler));
  s.genus = (2 - euler) / 2;
  return s;
}

Graph underlying_graph(const DartMap& m) {
  Graph g(m.vertex_count());
  for (int d = 0; d < m.dart_count(); ++d) {
    int e = m.alpha(d);
    if (d > e) continue;
    int u = m.vertex_of(d), v = m.vertex_of(e);
    if (u == v) throw std::runtime_error("zipped graph has a loop");
    if (g.adjacent(u, v)) throw std::runtime_error("zipped graph has a parallel edge");
    g.add_edge(u, v);
  }
  return g;
}

std::optional<Graph> dual_graph(const DartMap& m) {
  Graph g(m.face_count());
  for (int d = 0; d < m.dart_count(); ++d) {
    int e = m.alpha(d);
    if (d > e) continue;
    int u = m.face_of(d), v = m.face_of(e);
    if (u == v || g.adjacent(u, v)) return std::nullopt;
    g.add_edge(u, v);
  }
  return g;
}

DartMap dual_map(const DartMap& m) {
  return DartMap(m.alpha_perm(), m.sigma_perm());
}

std::vector<std::vector<int>> face_cycles(const DartMap& m) {
  std::vector<std::vector<int>> out(m.face_count());
  std::vector<bool> seen(m.dart_count(), false);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (seen[d]) continue;
    auto& cyc = out[m.face_of(d)];
    for (int e = d; !seen[e]; e = m.phi(e)) {
      seen[e] = true;
      cyc.push_back(m.vertex_of(e));
    }
  }
  return out;
}

std::vector<PetriePolygon> petrie_polygons(const DartMap& m) {
  const int darts = m.dart_count();
  // Zigzag states: (dart, turn parity).  One step crosses alpha then turns
  // with sigma (parity 0) or sigma^-1 (parity 1).
  auto step = [&m](int state) {
    int d = state >> 1;
    int parity = state & 1;
    int crossed = m.alpha(d);
    int next = parity == 0 ? m.sigma(crossed) : m.sigma_inverse(crossed);
    return (next << 1) | (1 - parity);
  };
  // The reversal involution (alpha(d), parity) conjugates the step map to its
  // inverse, pairing each orbit with its reversed traversal.
  auto reverse_state = [&m](int state) { return (m.alpha(state >> 1) << 1) | (state & 1); };

  std::vector<int> orbit_of(2 * darts, -1);
  std::vector<std::vector<int>> orbits;
  for (int s = 0; s < 2 * darts; ++s) {
    if (orbit_of[s] != -1) continue;
    std::vector<int> orbit;
    for (int t = s; orbit_of[t] == -1; t = step(t)) {
      orbit_of[t] = static_cast<int>(orbits.size());
      orbit.push_back(t);
    }
    orbits.push_back(std::move(orbit));
  }

  std::vector<PetriePolygon> out;
  std::vector<bool> consumed(orbits.size(), false);
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (consumed[i]) continue;
    consumed[i] = true;
    int partner = orbit_of[reverse_state(orbits[i].front())];
    if (partner >= 0 && partner != static_cast<int>(i)) consumed[partner] = true;
    PetriePolygon poly;
    for (int s : orbits[i]) poly.darts.push_back(s >> 1);
    out.push_back(std::move(poly));
  }
  return out;
}

std::vector<int> vertex_color_dual(const DartMap& m, const std::vector<CycleLabel>& labels) {
  if (static_cast<int>(labels.size()) != m.face_count())
    throw std::invalid_argument("vertex_color_dual: one label per face required");
  auto dual = dual_graph(m);
  if (!dual) throw std::runtime_error("vertex_color_dual: dual graph is not simple");
  std::vector<int> color(m.face_count());
  for (int f = 0; f < m.face_count(); ++f) color[f] = labels[f].i;
  for (auto [u, v] : dual->edges())
    if (color[u] == color[v])
      throw std::runtime_error("label coloring is not proper on the dual graph");
  return color;
}

}  // namespace kleinmap
