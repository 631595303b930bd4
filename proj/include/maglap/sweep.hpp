#pragma once

#include <cstddef>
#include <string>

#include "maglap/dml.hpp"

namespace maglap {

/// Serial runs every grid point in order on one thread; parallel fans the
/// points out over OpenMP threads. Results are written by grid index, so
/// both policies produce identical output.
enum class ExecutionPolicy { serial, parallel };

/// Spectra over a family of potentials on a fixed graph.
struct SweepResult {
  std::vector<std::vector<double>> points; // parameter tuple per grid point
  std::vector<Spectrum> spectra;           // same order as points
  int dimension = 1;                       // tuple size
  std::string graph_id;
  std::string family; // "const" | "single-chord" | "chord"
  int chord_index = -1;

  /// Rebuild the potential evaluated at grid point i.
  MagneticPotential potential_at(const Graph& g, std::size_t i) const;
};

/// Core kernel: one spectrum per potential.
std::vector<Spectrum> spectra_for_potentials(const Graph& g,
                                             const std::vector<MagneticPotential>& potentials,
                                             ExecutionPolicy policy);

/// Spectra at the constant potentials t_j = 2 pi j / grid_size.
SweepResult sweep_constant_potential(const Graph& g, int grid_size,
                                     ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Spectra with flux t_j on one chord of the BFS spanning tree and zero
/// elsewhere. Throws Disconnected, NotAChord.
SweepResult sweep_single_chord(const Graph& g, int chord_index, int grid_size,
                               ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Spectra over the full product grid of chord fluxes. Throws
/// Disconnected; BudgetExceeded when grid_size^(m-n+1) > budget.
SweepResult sweep_chord_fluxes(const Graph& g, int grid_size, std::size_t budget = 100000,
                               ExecutionPolicy policy = ExecutionPolicy::parallel);

} // namespace maglap
