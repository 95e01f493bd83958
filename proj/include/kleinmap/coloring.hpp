#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kleinmap/graph.hpp"

namespace kleinmap {

inline constexpr std::uint64_t kDefaultColoringBudget = 2'000'000'000;

// A maximum clique, found exactly (n <= 64).
std::vector<int> max_clique(const Graph& g);

// Exact proper k-colorability test; the coloring if one exists.
// Saturation-ordered backtracking with clique seeding and new-color capping.
std::optional<std::vector<int>> k_coloring(
    const Graph& g, int k, std::uint64_t step_budget = kDefaultColoringBudget);

// Exact chromatic number (n <= 64), proving both bounds.
int chromatic_number(const Graph& g, std::uint64_t step_budget = kDefaultColoringBudget);

}  // namespace kleinmap
