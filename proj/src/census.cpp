#include "kleinmap/census.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kleinmap/cycles.hpp"
#include "kleinmap/fano.hpp"
#include "kleinmap/hamilton.hpp"

namespace kleinmap {

Graph build_heawood() {
  FanoPlane fano = build_fano();
  Graph g(14);
  for (int l = 0; l < 7; ++l)
    for (int p : fano.lines[l]) g.add_edge(p - 1, 7 + l);
  return g;
}

Graph build_coxeter() {
  Graph g(28);
  const auto u = [](int x) { return x % 7; };
  const auto z = [](int x) { return 7 + x % 7; };
  const auto v = [](int x) { return 14 + x % 7; };
  const auto t = [](int x) { return 21 + x % 7; };
  for (int x = 0; x < 7; ++x) {
    g.add_edge(u(x), u(x + 1));  // step-1 heptagon
    g.add_edge(v(x), v(x + 2));  // step-2 heptagon
    g.add_edge(t(x), t(x + 3));  // step-3 heptagon
    g.add_edge(z(x), u(x));
    g.add_edge(z(x), v(x));
    g.add_edge(z(x), t(x));
  }
  return g;
}

std::string coxeter_vertex_name(int v) {
  if (v < 0 || v >= 28) throw std::invalid_argument("coxeter vertex out of range");
  static const char* kind = "uzvt";
  return std::string(1, kind[v / 7]) + std::to_string(v % 7);
}

Graph build_coxeter_from_heawood() {
  Graph heawood = build_heawood();
  auto cycles = enumerate_cycles(heawood, 6);
  const int n = static_cast<int>(cycles.size());
  Graph g(n);
  std::vector<std::set<int>> vertex_sets(n);
  for (int i = 0; i < n; ++i)
    vertex_sets[i] = std::set<int>(cycles[i].vertices.begin(), cycles[i].vertices.end());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool disjoint = std::none_of(vertex_sets[i].begin(), vertex_sets[i].end(),
                                   [&](int v) { return vertex_sets[j].count(v) > 0; });
      if (disjoint) g.add_edge(i, j);
    }
  }
  if (!g.is_regular() || g.order() == 0 || g.degree(0) != 3)
    throw std::runtime_error("six-cycle disjointness graph is not cubic");
  return g;
}

std::string to_string(Hamiltonicity h) {
  switch (h) {
    case Hamiltonicity::hamiltonian: return "hamiltonian";
    case Hamiltonicity::hypohamiltonian: return "hypohamiltonian";
    case Hamiltonicity::non_hamiltonian: return "non-hamiltonian";
  }
  return "?";
}

InvariantReport invariant_report(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("invariant_report needs a connected graph");
  InvariantReport r;
  r.order = g.order();
  auto deg = g.degree_sequence();
  deg.erase(std::unique(deg.begin(), deg.end()), deg.end());
  r.degrees = deg;
  r.diameter = diameter(g);
  auto gg = girth(g);
  if (!gg) throw std::invalid_argument("invariant_report needs a cyclic graph");
  r.girth = *gg;
  r.girth_cycle_count = static_cast<int>(enumerate_cycles(g, r.girth).size());
  auto aut = automorphism_group(g);
  r.automorphism_count = aut.size();
  r.arc_transitivity = arc_transitivity_degree(g, aut);
  r.intersection = intersection_array(g);
  r.weakly_regular = weakly_regular_params(g);
  if (hamiltonian_cycle(g)) {
    r.hamiltonicity = Hamiltonicity::hamiltonian;
  } else {
    r.hamiltonicity = is_hypohamiltonian(g) ? Hamiltonicity::hypohamiltonian
                                            : Hamiltonicity::non_hamiltonian;
  }
  return r;
}

}  // namespace kleinmap
