#include "maglap/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "maglap/generate.hpp"
#include "maglap/preorder.hpp"

namespace maglap {

bool TheoremReport::all_passed() const {
  for (const auto& c : checks)
    if (c.fail > 0) return false;
  return true;
}

std::string TheoremReport::summary() const {
  std::ostringstream os;
  os << "seed " << seed << ", trials " << trials << "\n";
  for (const auto& c : checks) {
    os << "  " << c.name << ": pass " << c.pass << ", fail " << c.fail << "\n";
    for (const auto& cx : c.counterexamples) os << "    counterexample: " << cx << "\n";
  }
  return os.str();
}

namespace {

class Suite {
public:
  Suite(std::uint64_t seed, int trials) : rng_(seed) {
    report_.seed = seed;
    report_.trials = trials;
  }

  TheoremReport run(int trials) {
    for (int i = 0; i < trials; ++i) tree_trial(i);
    for (int i = 0; i < trials; ++i) graph_trial();
    for (int i = 0; i < trials / 2; ++i) hamiltonian_trial();
    return report_;
  }

private:
  TheoremCheck& check(const std::string& name) {
    for (auto& c : report_.checks)
      if (c.name == name) return c;
    report_.checks.push_back({name, 0, 0, {}});
    return report_.checks.back();
  }

  void record(const std::string& name, bool ok, const std::string& instance) {
    TheoremCheck& c = check(name);
    if (ok) {
      ++c.pass;
    } else {
      ++c.fail;
      if (c.counterexamples.size() < 5) c.counterexamples.push_back(instance);
    }
  }

  static std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " edges=";
    for (const Edge& e : g.edges()) os << "(" << e.u << "," << e.v << ")";
    return os.str();
  }

  static std::string describe(const MagneticGraph& mg) {
    std::ostringstream os;
    os << describe(mg.graph) << " alpha=[";
    for (int i = 0; i < mg.potential.size(); ++i)
      os << (i ? "," : "") << mg.potential.value(i);
    os << "]";
    return os.str();
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Trees: matching bounds at zero potential. Alternate between uniform
  // random trees and guaranteed-matchable trees so both regimes appear.
  void tree_trial(int i) {
    int n = uniform(2, 14);
    Graph t = (i % 2 == 0) ? random_tree(n, rng_) : random_matchable_tree(n + (n % 2), rng_);
    n = t.vertex_count();
    const int mu = matching_number(t);
    Spectrum s = spectrum(t, constant_potential(t, 0.0));
    const std::string inst = describe(t) + " mu=" + std::to_string(mu);

    record("tree matching bounds (non-strict)",
           s.lambda(mu + 1) <= 2.0 + delta_certificate &&
               s.lambda(n - mu + 1) >= 2.0 - delta_certificate,
           inst);
    if (2 * mu == n) {
      record("matchable tree: lambda_{n/2+1} = 2",
             std::abs(s.lambda(n / 2 + 1) - 2.0) <= eps_spectrum, inst);
      bool strict = s.lambda(n / 2) < 2.0 - delta_certificate;
      if (n / 2 + 2 <= n) strict = strict && s.lambda(n / 2 + 2) > 2.0 + delta_certificate;
      record("matchable tree: strict neighbors of 2", strict, inst);
    } else {
      record("deficient tree: strict matching bounds",
             s.lambda(mu + 1) < 2.0 - delta_certificate &&
                 s.lambda(n - mu + 1) > 2.0 + delta_certificate,
             inst);
    }
  }

  // Connected graphs with random potentials: interlacing and the
  // matching bounds that hold for every potential.
  void graph_trial() {
    const int n = uniform(4, 12);
    const int m = uniform(n - 1, std::min(n * (n - 1) / 2, n + 5));
    Graph g = random_connected_graph(n, m, rng_);
    const int mu = matching_number(g);

    for (int rep = 0; rep < 8; ++rep) {
      MagneticGraph mg(g, random_potential(g, rng_));
      const std::string inst = describe(mg);

      EdgeId e = static_cast<EdgeId>(uniform(0, g.edge_count() - 1));
      auto [below, above] = check_deletion_interlacing(mg, e);
      record("edge deletion interlacing", below.holds && above.holds,
             inst + " e=" + std::to_string(e));

      int r = uniform(1, std::min(3, g.edge_count()));
      std::vector<EdgeId> picked;
      while (static_cast<int>(picked.size()) < r) {
        EdgeId c = static_cast<EdgeId>(uniform(0, g.edge_count() - 1));
        if (std::find(picked.begin(), picked.end(), c) == picked.end()) picked.push_back(c);
      }
      MagneticGraph reduced = delete_edges(mg, picked);
      Spectrum sg = spectrum(mg), sr = spectrum(reduced);
      record("r-edge deletion interlacing",
             spectrally_less(sr, sg, 0).holds && spectrally_less(sg, sr, r).holds,
             inst + " r=" + std::to_string(r));

      Spectrum s = sg;
      bool ok = s.lambda(n - mu + 1) >= 2.0 - delta_certificate;
      if (mu + n - m >= 1) ok = ok && s.lambda(mu + n - m) <= 2.0 + delta_certificate;
      record("connected graph matching bounds (any potential)", ok, inst);

      if (n > 2 * mu) {
        bool strict = s.lambda(n - mu + 1) > 2.0 + delta_certificate;
        if (mu + n - m >= 1) strict = strict && s.lambda(mu + n - m) < 2.0 - delta_certificate;
        record("deficient graph: strict bounds (any potential)", strict, inst);
      } else {
        bool strict = true;
        int left = 3 * n / 2 - m - 1;
        if (left >= 1) strict = s.lambda(left) < 2.0 - delta_certificate;
        if (n / 2 + 2 <= n) strict = strict && s.lambda(n / 2 + 2) > 2.0 + delta_certificate;
        record("perfectly matched graph: strict window", strict, inst);
      }
    }
  }

  // Planted Hamiltonian instances: cycle comparison chain and the
  // order-n spectral consequences of Hamiltonicity.
  void hamiltonian_trial() {
    const int n = uniform(4, 12);
    const int extra = uniform(0, n);
    PlantedHamiltonian ph = planted_hamiltonian_graph(n, extra, rng_);
    const Graph& g = ph.graph;
    const int m = g.edge_count();

    MagneticGraph mg(g, random_potential(g, rng_));
    const std::string inst = describe(mg);

    std::vector<EdgeId> non_cycle;
    for (EdgeId e = 0; e < m; ++e)
      if (std::find(ph.cycle_edges.begin(), ph.cycle_edges.end(), e) == ph.cycle_edges.end())
        non_cycle.push_back(e);
    MagneticGraph cycle_part = delete_edges(mg, non_cycle);
    Spectrum sc = spectrum(cycle_part), sg = spectrum(mg);
    record("hamiltonian cycle comparison chain",
           spectrally_less(sc, sg, 0).holds && spectrally_less(sg, sc, m - n).holds, inst);

    bool ok;
    if (n % 2 == 0) {
      ok = sg.lambda(n / 2 + 1) >= 2.0 - delta_certificate;
      if (n / 2 + 2 <= n) ok = ok && sg.lambda(n / 2 + 2) > 2.0 + delta_certificate;
    } else {
      ok = sg.lambda((n + 1) / 2 + 1) > 2.0 + delta_certificate;
    }
    record("hamiltonian graph eigenvalue floor", ok, inst);
  }

  Rng rng_;
  TheoremReport report_;
};

} // namespace

TheoremReport verify_theorem_suite(std::uint64_t seed, int trials) {
  return Suite(seed, trials).run(trials);
}

} // namespace maglap
