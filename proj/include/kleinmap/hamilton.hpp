#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kleinmap/graph.hpp"

namespace kleinmap {

// Raised when an exact search exceeds its step budget; an explicit error
// instead of a wrong answer.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const char* what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultHamiltonBudget = 1'000'000'000;

// Exact backtracking Hamilton cycle search with connectivity and degree
// pruning.  Returns a vertex order starting at 0, or nullopt.  n must be >= 3.
std::optional<std::vector<int>> hamiltonian_cycle(
    const Graph& g, std::uint64_t step_budget = kDefaultHamiltonBudget);

// Not hamiltonian, yet every single-vertex deletion is.
bool is_hypohamiltonian(const Graph& g,
                        std::uint64_t step_budget = kDefaultHamiltonBudget);

}  // namespace kleinmap
