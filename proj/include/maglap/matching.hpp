#pragma once

#include "maglap/graph.hpp"

namespace maglap {

/// A set of pairwise independent edges.
struct Matching {
  std::vector<EdgeId> edges; // ascending edge ids
  int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Exact maximum matching by branch and bound: branch on the lowest free
/// vertex (match it through each free incident edge, or leave it
/// unmatched), seeded with a greedy matching and pruned with the
/// free-vertex and greedy-vertex-cover bounds.
Matching maximum_matching(const Graph& g);

int matching_number(const Graph& g);

/// True when a perfect matching exists (2 mu(G) = n).
bool is_matchable(const Graph& g);

/// True when `edges` is a valid matching of g.
bool is_valid_matching(const Graph& g, const std::vector<EdgeId>& edges);

} // namespace maglap
