#pragma once

#include <iosfwd>
#include <optional>

#include "maglap/hamilton.hpp"
#include "maglap/matching.hpp"
#include "maglap/sweep.hpp"

namespace maglap {

enum class CertificateKind {
  non_matchable,
  non_hamiltonian_via_matching,
  non_hamiltonian_via_cycle,
};

/// Cycle-comparison convention. `paper` compares the graph swept at the
/// constant potential t against the n-cycle carrying flux n*t (the
/// consistently oriented reading); `robust` requires the inequality for
/// every flux (n-2q)*t a Hamiltonian cycle could carry, whichever way its
/// edges are traversed, and is the provably sound variant.
enum class CycleCompareMode { paper, robust };

/// A verified spectral obstruction. The inequality lhs vs rhs clears
/// delta_certificate and re-verifies from the stored witness potential.
struct Certificate {
  CertificateKind kind;
  MagneticPotential witness_potential;
  int index = 0;  // eigenvalue index k (1-based)
  double lhs = 0; // the eigenvalue that must stay below/above rhs
  double rhs = 0;
  double margin = 0; // |lhs - rhs|
  double tolerance = delta_certificate;
  std::optional<CycleCompareMode> mode; // cycle route only
};

const char* to_string(CertificateKind k);
const char* to_string(CycleCompareMode m);

/// Flux-space search plan: constant sweep, then per-chord sweeps, then
/// the full chord torus, all under a total point budget.
struct SweepStrategy {
  int const_grid = 64;
  int single_chord_grid = 256;
  int torus_grid = 16;
  std::size_t budget = 100000;
  bool use_const = true;
  bool use_single_chord = true;
  bool use_torus = true;
  ExecutionPolicy policy = ExecutionPolicy::parallel;
  int oracle_max_n = 20; // cross-check certificates below this size
};

/// Search swept potentials for lambda_{n/2+1} < 2 - delta; such a witness
/// proves no perfect matching exists. Throws NotApplicable for odd n and
/// SoundnessViolation if the exact matching oracle contradicts a
/// certificate (which would mean an implementation bug).
std::optional<Certificate> certify_nonmatchable(const Graph& g, const SweepStrategy& strategy = {});

/// Same search, restated as a Hamiltonicity obstruction (even n > 3).
std::optional<Certificate> certify_nonhamiltonian_via_matching(const Graph& g,
                                                               const SweepStrategy& strategy = {});

/// Compare the graph's constant-potential spectra against cycle spectra
/// over a t grid. In robust mode a contradiction with the exhaustive
/// oracle is a hard SoundnessViolation; in paper mode it is logged to
/// `log` and the certificate suppressed.
std::optional<Certificate> certify_nonhamiltonian_via_cycle(
    const Graph& g, int grid_size = 64, CycleCompareMode mode = CycleCompareMode::robust,
    std::ostream* log = nullptr, const SweepStrategy& strategy = {});

/// Recompute the certificate's inequality from its stored witness.
bool reverify_certificate(const Graph& g, const Certificate& cert);

} // namespace maglap
