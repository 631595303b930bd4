#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maglap/certify.hpp"

namespace maglap {

struct TheoremCheck {
  std::string name;
  int pass = 0;
  int fail = 0;
  std::vector<std::string> counterexamples; // first few failing instances
};

struct TheoremReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<TheoremCheck> checks;

  bool all_passed() const;
  std::string summary() const;
};

/// Randomized verification of the spectral bounds this library relies on:
/// tree matching bounds (exact and strict variants), edge-deletion
/// interlacing with one and several edges, the connected-graph matching
/// bounds for arbitrary potentials, and the Hamiltonian cycle comparison
/// chain. `trials` sets the tree and graph instance counts; planted
/// Hamiltonian instances run at trials/2.
TheoremReport verify_theorem_suite(std::uint64_t seed, int trials);

} // namespace maglap
