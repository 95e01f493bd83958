#include "kleinmap/ooa.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace kleinmap {

namespace {

constexpr int U(int x) { return x; }
constexpr int Z(int x) { return 7 + x; }
constexpr int V(int x) { return 14 + x; }
constexpr int T(int x) { return 21 + x; }

// All k-vertex windows of a directed cycle, with the traversal direction
// relative to the canonical path form.
struct WindowRef {
  int cycle;
  int start;
  bool forward;  // cycle order equals canonical path order
};

std::map<PathCopy, std::vector<WindowRef>> collect_windows(
    const std::vector<std::vector<int>>& cycles, int k) {
  std::map<PathCopy, std::vector<WindowRef>> windows;
  for (size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    const int len = static_cast<int>(cyc.size());
    for (int s = 0; s < len; ++s) {
      std::vector<int> w(k);
      for (int i = 0; i < k; ++i) w[i] = cyc[(s + i) % len];
      auto canon = canonical_path(w);
      bool forward = canon.vertices == w;
      windows[canon].push_back({static_cast<int>(c), s, forward});
    }
  }
  return windows;
}

}  // namespace

OrientedCycleSet paper_ooa_fixture() {
  OrientedCycleSet s;
  auto add = [&s](int i, int j, std::array<int, 7> c) {
    s.cycles.emplace_back(c.begin(), c.end());
    s.labels.push_back({i, j});
  };
  add(0, 1, {U(1), U(2), U(3), U(4), U(5), U(6), U(0)});
  add(1, 1, {U(1), Z(1), V(1), V(3), Z(3), U(3), U(2)});
  add(2, 1, {V(5), Z(5), U(5), U(4), U(3), Z(3), V(3)});
  add(3, 1, {V(5), V(0), Z(0), U(0), U(6), U(5), Z(5)});
  add(4, 1, {U(1), U(0), Z(0), V(0), V(2), Z(2), U(2)});
  add(5, 1, {Z(4), U(4), U(3), U(2), Z(2), V(2), V(4)});
  add(6, 1, {Z(4), V(4), V(6), Z(6), U(6), U(5), U(4)});
  add(7, 1, {U(1), U(0), U(6), Z(6), V(6), V(1), Z(1)});
  add(0, 2, {V(1), V(3), V(5), V(0), V(2), V(4), V(6)});
  add(1, 2, {Z(4), V(4), V(2), V(0), Z(0), T(0), T(4)});
  add(2, 2, {T(6), Z(6), V(6), V(4), V(2), Z(2), T(2)});
  add(3, 2, {Z(4), T(4), T(1), Z(1), V(1), V(6), V(4)});
  add(4, 2, {T(6), T(3), Z(3), V(3), V(1), V(6), Z(6)});
  add(5, 2, {V(5), V(3), V(1), Z(1), T(1), T(5), Z(5)});
  add(6, 2, {V(5), V(3), Z(3), T(3), T(0), Z(0), V(0)});
  add(7, 2, {V(5), Z(5), T(5), T(2), Z(2), V(2), V(0)});
  add(0, 3, {T(1), T(5), T(2), T(6), T(3), T(0), T(4)});
  add(1, 3, {T(6), T(2), T(5), Z(5), U(5), U(6), Z(6)});
  add(2, 3, {U(1), Z(1), T(1), T(4), T(0), Z(0), U(0)});
  add(3, 3, {T(6), T(2), Z(2), U(2), U(3), Z(3), T(3)});
  add(4, 3, {Z(4), U(4), U(5), Z(5), T(5), T(1), T(4)});
  add(5, 3, {T(6), Z(6), U(6), U(0), Z(0), T(0), T(3)});
  add(6, 3, {U(1), U(2), Z(2), T(2), T(5), T(1), Z(1)});
  add(7, 3, {Z(4), T(4), T(0), T(3), Z(3), U(3), U(4)});
  return s;
}

std::vector<int> square_cycle(const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw std::invalid_argument("square_cycle needs length >= 3");
  if (len % 2 == 0) throw std::invalid_argument("square_cycle rejects even cycles");
  std::vector<int> out(len);
  for (int p = 0; p < len; ++p) out[p] = cycle[(2 * p) % len];
  return out;
}

std::optional<OoaSolveResult> solve_ooa(const Graph& g, const std::vector<CycleCopy>& cycles,
                                        int k) {
  if (k < 2) throw std::invalid_argument("solve_ooa needs k >= 2");
  for (const auto& c : cycles)
    if (!is_cycle_of(g, c.vertices))
      throw std::invalid_argument("solve_ooa: input is not a cycle of the graph");

  std::vector<std::vector<int>> directed;
  directed.reserve(cycles.size());
  for (const auto& c : cycles) directed.push_back(c.vertices);

  auto windows = collect_windows(directed, k);
  // Parity constraints: flip[c1] xor flip[c2] = 1 when both cycles traverse
  // the shared path in the same direction, 0 otherwise.
  const int n = static_cast<int>(cycles.size());
  std::vector<std::vector<std::pair<int, int>>> constraint(n);
  for (const auto& [path, refs] : windows) {
    if (refs.size() > 2)
      throw std::invalid_argument("solve_ooa: a sub-path lies in more than two cycles");
    if (refs.size() != 2) continue;
    if (refs[0].cycle == refs[1].cycle)
      throw std::invalid_argument("solve_ooa: a sub-path repeats within one cycle");
    int parity = refs[0].forward == refs[1].forward ? 1 : 0;
    constraint[refs[0].cycle].emplace_back(refs[1].cycle, parity);
    constraint[refs[1].cycle].emplace_back(refs[0].cycle, parity);
  }

  std::vector<int> flip(n, -1), component(n, -1);
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (flip[root] != -1) continue;
    flip[root] = 0;  // least assignment: component root keeps its direction
    component[root] = components;
    std::vector<int> queue{root};
    for (size_t i = 0; i < queue.size(); ++i) {
      int c = queue[i];
      for (auto [d, parity] : constraint[c]) {
        int want = flip[c] ^ parity;
        if (flip[d] == -1) {
          flip[d] = want;
          component[d] = components;
          queue.push_back(d);
        } else if (flip[d] != want) {
          return std::nullopt;  // odd constraint cycle: unsat
        }
      }
    }
    ++components;
  }

  OoaSolveResult result;
  for (int c = 0; c < n; ++c) {
    auto verts = directed[c];
    if (flip[c]) std::reverse(verts.begin() + 1, verts.end());
    result.set.cycles.push_back(std::move(verts));
  }
  result.component = component;
  result.component_count = components;
  return result;
}

int count_ooa_violations(const Graph& g, const OrientedCycleSet& ooa, int k) {
  if (k < 2) throw std::invalid_argument("count_ooa_violations needs k >= 2");
  for (const auto& c : ooa.cycles)
    if (!is_cycle_of(g, c))
      throw std::invalid_argument("count_ooa_violations: not a cycle of the graph");
  auto windows = collect_windows(ooa.cycles, k);
  int violations = 0;
  for (const auto& [path, refs] : windows) {
    if (refs.size() == 2 && refs[0].forward == refs[1].forward) ++violations;
    if (refs.size() > 2) violations += static_cast<int>(refs.size());
  }
  return violations;
}

}  // namespace kleinmap
