#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>

#include "maglap/generate.hpp"
#include "maglap/sweep.hpp"
#include "test_support.hpp"

using namespace maglap;
using namespace maglap::test;

TEST_CASE("constant sweep of a tree never moves the spectrum") {
  SweepResult r = sweep_constant_potential(k2(), 8);
  REQUIRE(r.spectra.size() == 8);
  for (const Spectrum& s : r.spectra) {
    CHECK(std::abs(s.lambda(1) - 0.0) <= eps_spectrum);
    CHECK(std::abs(s.lambda(2) - 2.0) <= eps_spectrum);
  }
}

TEST_CASE("constant sweep of the pendant-cycle fixture carries no flux") {
  // the 4-cycle has two ascending and two descending reference arcs, so a
  // constant potential is gauge-trivial at every t and lambda_4 stays 2
  Graph g1 = nonmatchable6();
  SweepResult r = sweep_constant_potential(g1, 64);
  SpanningTreeDecomposition d = spanning_tree(g1);
  for (std::size_t i = 0; i < r.spectra.size(); ++i) {
    FluxVector f = chord_fluxes(MagneticGraph(g1, r.potential_at(g1, i)), d);
    CHECK(angles_equal(f.fluxes[0], 0.0));
    CHECK(std::abs(r.spectra[i].lambda(4) - 2.0) <= eps_spectrum);
  }
}

TEST_CASE("constant sweep of a cycle matches the closed form at its chord flux") {
  Graph c6 = cycle_graph(6);
  SpanningTreeDecomposition d = spanning_tree(c6);
  SweepResult r = sweep_constant_potential(c6, 32);
  for (std::size_t i = 0; i < r.spectra.size(); ++i) {
    double phi = chord_fluxes(MagneticGraph(c6, r.potential_at(c6, i)), d).fluxes[0];
    Spectrum closed = cycle_spectrum_closed_form(6, phi);
    for (int k = 1; k <= 6; ++k)
      CHECK(std::abs(r.spectra[i].lambda(k) - closed.lambda(k)) <= eps_spectrum);
  }
}

TEST_CASE("single-chord sweep dips lambda_4 lowest at a half-turn flux") {
  Graph g1 = nonmatchable6();
  SweepResult r = sweep_single_chord(g1, 0, 256);
  double best = 10.0, best_t = -1.0;
  for (std::size_t i = 0; i < r.spectra.size(); ++i) {
    double v = r.spectra[i].lambda(4);
    if (v < best) {
      best = v;
      best_t = r.points[i][0];
    }
  }
  CHECK(best == doctest::Approx(1.6367).epsilon(0.001));
  CHECK(angles_equal(best_t, pi));
  CHECK_THROWS_AS(sweep_single_chord(g1, 1, 16), Error); // only one chord
}

TEST_CASE("chord torus") {
  Graph path = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  SweepResult single = sweep_chord_fluxes(path, 16);
  CHECK(single.spectra.size() == 1); // tree: empty torus
  CHECK(single.dimension == 0);

  Graph g2 = nonhamiltonian6();
  SweepResult torus = sweep_chord_fluxes(g2, 4);
  CHECK(torus.dimension == 3);
  CHECK(torus.spectra.size() == 64);
  CHECK(torus.points[1][2] != torus.points[0][2]); // last axis fastest

  CHECK_THROWS_AS(sweep_chord_fluxes(g2, 64, 1000), Error); // 64^3 over budget
}

TEST_CASE("a 16^3 torus scan finishes far under a second per point") {
  Graph g2 = nonhamiltonian6();
  auto t0 = std::chrono::steady_clock::now();
  SweepResult torus = sweep_chord_fluxes(g2, 16);
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(torus.spectra.size() == 4096);
  CHECK(dt / 4096.0 < 0.05);
}

TEST_CASE("serial and parallel sweeps agree exactly") {
  Rng rng(55);
  Graph g = random_connected_graph(10, 14, rng);
  SweepResult serial = sweep_constant_potential(g, 48, ExecutionPolicy::serial);
  SweepResult parallel = sweep_constant_potential(g, 48, ExecutionPolicy::parallel);
  REQUIRE(serial.spectra.size() == parallel.spectra.size());
  for (std::size_t i = 0; i < serial.spectra.size(); ++i)
    for (int k = 1; k <= serial.spectra[i].size(); ++k)
      CHECK(serial.spectra[i].lambda(k) == parallel.spectra[i].lambda(k));

  SweepResult ts = sweep_chord_fluxes(g, 5, 100000, ExecutionPolicy::serial);
  SweepResult tp = sweep_chord_fluxes(g, 5, 100000, ExecutionPolicy::parallel);
  REQUIRE(ts.spectra.size() == tp.spectra.size());
  for (std::size_t i = 0; i < ts.spectra.size(); ++i)
    CHECK(ts.spectra[i].lambda(1) == tp.spectra[i].lambda(1));
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(sweep_constant_potential(k2(), 1), Error);
  CHECK_THROWS_AS(sweep_constant_potential(k2(), 0), Error);
}
