#pragma once

#include <vector>

#include "maglap/angles.hpp"
#include "maglap/graph.hpp"

namespace maglap {

/// Angle-valued 1-cochain: one value in [0,2pi) per edge, carried by the
/// reference arc u->v; the reverse arc carries the negation mod 2pi.
class MagneticPotential {
public:
  MagneticPotential() = default;
  explicit MagneticPotential(std::vector<double> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// Value on the reference arc of edge e.
  double value(EdgeId e) const { return values_[static_cast<size_t>(e)]; }
  /// Value seen when traversing edge e forward or backward.
  double arc_value(EdgeId e, bool forward) const {
    return forward ? values_[static_cast<size_t>(e)]
                   : normalize_angle(-values_[static_cast<size_t>(e)]);
  }
  const std::vector<double>& values() const noexcept { return values_; }

private:
  std::vector<double> values_;
};

/// Vertex function used for gauge transformations (a 0-cochain).
class Gauge {
public:
  Gauge() = default;
  explicit Gauge(std::vector<double> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  double value(int v) const { return values_[static_cast<size_t>(v)]; }
  const std::vector<double>& values() const noexcept { return values_; }

private:
  std::vector<double> values_;
};

/// Gauge-invariant canonical form of a potential: one flux per chord of
/// a spanning tree decomposition.
struct FluxVector {
  std::vector<double> fluxes;
  std::vector<EdgeId> chords; // identity of the decomposition used
};

/// A graph together with a magnetic potential.
struct MagneticGraph {
  Graph graph;
  MagneticPotential potential;

  MagneticGraph(Graph g, MagneticPotential p);
};

/// Potential with value t on every reference arc.
MagneticPotential constant_potential(const Graph& g, double t);

/// (d xi)_e = xi(v) - xi(u) on the reference arc (u,v), mod 2pi.
MagneticPotential coboundary(const Graph& g, const Gauge& xi);

/// alpha + d(xi), normalized. Throws SizeMismatch.
MagneticPotential gauge_transform(const Graph& g, const MagneticPotential& alpha, const Gauge& xi);
MagneticPotential gauge_transform(const MagneticGraph& mg, const Gauge& xi);

/// Signed sum of potential values along a closed walk, in [0,2pi).
/// Throws NotClosed when the arcs do not chain back to the start.
double flux(const Graph& g, const MagneticPotential& alpha, const ArcPath& cycle);

/// Flux of the potential around each fundamental cycle of the decomposition.
FluxVector chord_fluxes(const MagneticGraph& mg, const SpanningTreeDecomposition& d);

/// Potential with the given flux on each chord and zero on tree edges;
/// the canonical representative of a gauge class. Throws SizeMismatch.
MagneticPotential potential_from_chord_fluxes(const Graph& g, const SpanningTreeDecomposition& d,
                                              const FluxVector& f);

/// True when both potentials have equal chord fluxes mod 2pi over the same
/// graph. Throws GraphMismatch when the underlying graphs differ.
bool is_gauge_equivalent(const MagneticGraph& a, const MagneticGraph& b);

} // namespace maglap
