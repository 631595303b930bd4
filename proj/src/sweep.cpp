#include "maglap/sweep.hpp"

#include <cmath>
#include <exception>
#include <string>

namespace maglap {

namespace {

std::string graph_id_of(const Graph& g) {
  return "n" + std::to_string(g.vertex_count()) + "m" + std::to_string(g.edge_count());
}

std::vector<double> grid_angles(int grid_size) {
  if (grid_size < 2)
    throw Error(Error::Code::InvalidArgument, "grid size must be >= 2");
  std::vector<double> t(static_cast<size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) t[j] = two_pi * j / grid_size;
  return t;
}

} // namespace

std::vector<Spectrum> spectra_for_potentials(const Graph& g,
                                             const std::vector<MagneticPotential>& potentials,
                                             ExecutionPolicy policy) {
  std::vector<Spectrum> out(potentials.size());
  if (policy == ExecutionPolicy::serial) {
    for (std::size_t i = 0; i < potentials.size(); ++i)
      out[i] = spectrum(MagneticGraph(g, potentials[i]));
    return out;
  }

  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(potentials.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = spectrum(MagneticGraph(g, potentials[i]));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

MagneticPotential SweepResult::potential_at(const Graph& g, std::size_t i) const {
  const std::vector<double>& p = points.at(i);
  if (family == "const") return constant_potential(g, p.at(0));
  SpanningTreeDecomposition d = spanning_tree(g);
  FluxVector f;
  f.chords = d.chords();
  if (family == "single-chord") {
    f.fluxes.assign(f.chords.size(), 0.0);
    f.fluxes.at(static_cast<size_t>(chord_index)) = p.at(0);
  } else {
    f.fluxes = p;
  }
  return potential_from_chord_fluxes(g, d, f);
}

SweepResult sweep_constant_potential(const Graph& g, int grid_size, ExecutionPolicy policy) {
  SweepResult r;
  r.family = "const";
  r.graph_id = graph_id_of(g);
  std::vector<MagneticPotential> pots;
  for (double t : grid_angles(grid_size)) {
    r.points.push_back({t});
    pots.push_back(constant_potential(g, t));
  }
  r.spectra = spectra_for_potentials(g, pots, policy);
  return r;
}

SweepResult sweep_single_chord(const Graph& g, int chord_index, int grid_size,
                               ExecutionPolicy policy) {
  SpanningTreeDecomposition d = spanning_tree(g);
  if (chord_index < 0 || chord_index >= d.chord_count())
    throw Error(Error::Code::NotAChord,
                "chord index " + std::to_string(chord_index) + " outside 0.." +
                    std::to_string(d.chord_count() - 1));
  SweepResult r;
  r.family = "single-chord";
  r.chord_index = chord_index;
  r.graph_id = graph_id_of(g);
  std::vector<MagneticPotential> pots;
  FluxVector f;
  f.chords = d.chords();
  f.fluxes.assign(f.chords.size(), 0.0);
  for (double t : grid_angles(grid_size)) {
    r.points.push_back({t});
    f.fluxes[static_cast<size_t>(chord_index)] = t;
    pots.push_back(potential_from_chord_fluxes(g, d, f));
  }
  r.spectra = spectra_for_potentials(g, pots, policy);
  return r;
}

SweepResult sweep_chord_fluxes(const Graph& g, int grid_size, std::size_t budget,
                               ExecutionPolicy policy) {
  SpanningTreeDecomposition d = spanning_tree(g);
  const int k = d.chord_count();
  SweepResult r;
  r.family = "chord";
  r.graph_id = graph_id_of(g);
  r.dimension = k;

  if (k == 0) { // tree: the torus is a single point
    r.points.push_back({});
    r.spectra = spectra_for_potentials(g, {constant_potential(g, 0.0)}, policy);
    return r;
  }

  std::vector<double> axis = grid_angles(grid_size);
  double total = std::pow(static_cast<double>(grid_size), k);
  if (total > static_cast<double>(budget))
    throw Error(Error::Code::BudgetExceeded,
                std::to_string(grid_size) + "^" + std::to_string(k) + " grid points exceed budget " +
                    std::to_string(budget));

  std::vector<MagneticPotential> pots;
  std::vector<int> idx(static_cast<size_t>(k), 0);
  FluxVector f;
  f.chords = d.chords();
  f.fluxes.assign(f.chords.size(), 0.0);
  while (true) {
    std::vector<double> point(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) point[i] = axis[static_cast<size_t>(idx[i])];
    f.fluxes = point;
    r.points.push_back(std::move(point));
    pots.push_back(potential_from_chord_fluxes(g, d, f));
    int i = k - 1; // odometer, last coordinate fastest
    while (i >= 0 && ++idx[i] == grid_size) idx[i--] = 0;
    if (i < 0) break;
  }
  r.spectra = spectra_for_potentials(g, pots, policy);
  return r;
}

} // namespace maglap
