#pragma once

#include <random>

#include "maglap/potential.hpp"

namespace maglap {

using Rng = std::mt19937_64;

/// Uniform random labeled tree on n vertices (Pruefer decode).
Graph random_tree(int n, Rng& rng);

/// Random tree on an even number of vertices that carries a perfect
/// matching by construction.
Graph random_matchable_tree(int n, Rng& rng);

/// Random connected graph: a random spanning tree plus extra distinct
/// edges up to edge_count (clamped to the simple-graph maximum).
Graph random_connected_graph(int n, int edge_count, Rng& rng);

/// A graph built around a planted Hamiltonian cycle.
struct PlantedHamiltonian {
  Graph graph;
  std::vector<int> cycle_vertices;
  std::vector<EdgeId> cycle_edges; // ids in `graph`
};
PlantedHamiltonian planted_hamiltonian_graph(int n, int extra_edges, Rng& rng);

/// Uniform angles on every edge / vertex.
MagneticPotential random_potential(const Graph& g, Rng& rng);
Gauge random_gauge(int vertex_count, Rng& rng);

} // namespace maglap
