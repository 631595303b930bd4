#include "maglap/potential.hpp"

#include <string>

namespace maglap {

MagneticPotential::MagneticPotential(std::vector<double> values) : values_(std::move(values)) {
  for (double& v : values_) v = normalize_angle(v);
}

Gauge::Gauge(std::vector<double> values) : values_(std::move(values)) {
  for (double& v : values_) v = normalize_angle(v);
}

MagneticGraph::MagneticGraph(Graph g, MagneticPotential p)
    : graph(std::move(g)), potential(std::move(p)) {
  if (potential.size() != graph.edge_count())
    throw Error(Error::Code::SizeMismatch,
                "potential has " + std::to_string(potential.size()) + " values for " +
                    std::to_string(graph.edge_count()) + " edges");
}

MagneticPotential constant_potential(const Graph& g, double t) {
  return MagneticPotential(std::vector<double>(g.edge_count(), normalize_angle(t)));
}

MagneticPotential coboundary(const Graph& g, const Gauge& xi) {
  if (xi.size() != g.vertex_count())
    throw Error(Error::Code::SizeMismatch, "gauge size does not match vertex count");
  std::vector<double> vals(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    vals[e] = xi.value(g.edge(e).v) - xi.value(g.edge(e).u);
  return MagneticPotential(std::move(vals));
}

MagneticPotential gauge_transform(const Graph& g, const MagneticPotential& alpha, const Gauge& xi) {
  if (alpha.size() != g.edge_count())
    throw Error(Error::Code::SizeMismatch, "potential size does not match edge count");
  MagneticPotential d = coboundary(g, xi);
  std::vector<double> vals(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) vals[e] = alpha.value(e) + d.value(e);
  return MagneticPotential(std::move(vals));
}

MagneticPotential gauge_transform(const MagneticGraph& mg, const Gauge& xi) {
  return gauge_transform(mg.graph, mg.potential, xi);
}

double flux(const Graph& g, const MagneticPotential& alpha, const ArcPath& cycle) {
  if (alpha.size() != g.edge_count())
    throw Error(Error::Code::SizeMismatch, "potential size does not match edge count");
  if (!is_closed_walk(g, cycle))
    throw Error(Error::Code::NotClosed, "arc sequence is not a closed walk");
  double sum = 0.0;
  for (const Arc& a : cycle) sum += a.forward ? alpha.value(a.edge) : -alpha.value(a.edge);
  return normalize_angle(sum);
}

FluxVector chord_fluxes(const MagneticGraph& mg, const SpanningTreeDecomposition& d) {
  FluxVector f;
  f.chords = d.chords();
  f.fluxes.reserve(f.chords.size());
  for (EdgeId c : f.chords) f.fluxes.push_back(flux(mg.graph, mg.potential, d.fundamental_cycle(c)));
  return f;
}

MagneticPotential potential_from_chord_fluxes(const Graph& g, const SpanningTreeDecomposition& d,
                                              const FluxVector& f) {
  if (f.fluxes.size() != d.chords().size())
    throw Error(Error::Code::SizeMismatch, "flux vector does not match chord count");
  std::vector<double> vals(g.edge_count(), 0.0);
  for (size_t i = 0; i < f.fluxes.size(); ++i)
    vals[d.chords()[i]] = normalize_angle(f.fluxes[i]);
  return MagneticPotential(std::move(vals));
}

bool is_gauge_equivalent(const MagneticGraph& a, const MagneticGraph& b) {
  if (!(a.graph == b.graph))
    throw Error(Error::Code::GraphMismatch, "potentials live on different graphs");
  SpanningTreeDecomposition d = spanning_tree(a.graph);
  FluxVector fa = chord_fluxes(a, d);
  FluxVector fb = chord_fluxes(b, d);
  for (size_t i = 0; i < fa.fluxes.size(); ++i)
    if (!angles_equal(fa.fluxes[i], fb.fluxes[i])) return false;
  return true;
}

} // namespace maglap
