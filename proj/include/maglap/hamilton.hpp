#pragma once

#include <cstdint>
#include <optional>

#include "maglap/graph.hpp"

namespace maglap {

enum class HamiltonStatus {
  found,   // a Hamiltonian cycle was found (stored in `cycle`)
  none,    // exhaustive search completed: no Hamiltonian cycle exists
  unknown, // search budget exhausted before completion (n > exhaustive_max_n)
};

struct HamiltonianCycle {
  std::vector<int> vertices; // v_0 .. v_{n-1}, consecutive and wrap adjacency
};

struct HamiltonResult {
  HamiltonStatus status = HamiltonStatus::none;
  std::optional<HamiltonianCycle> cycle;
  std::uint64_t nodes_explored = 0;
};

struct HamiltonOptions {
  int exhaustive_max_n = 20;             // full search guaranteed up to here
  std::uint64_t node_budget = 20'000'000; // cutoff beyond exhaustive_max_n
};

/// Backtracking Hamiltonian cycle search with degree and connectivity
/// pruning. For n <= exhaustive_max_n the search runs to completion, so
/// `none` is a proof of non-Hamiltonicity. Throws CycleTooSmall for n < 3.
HamiltonResult find_hamiltonian_cycle(const Graph& g, const HamiltonOptions& opts = {});

/// True when `cycle` is a valid Hamiltonian cycle of g.
bool is_valid_hamiltonian_cycle(const Graph& g, const HamiltonianCycle& cycle);

} // namespace maglap
