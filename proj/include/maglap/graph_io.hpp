#pragma once

#include <optional>
#include <string>

#include "maglap/certify.hpp"
#include "maglap/sweep.hpp"

namespace maglap {

struct ParsedGraph {
  Graph graph;
  std::optional<MagneticPotential> potential;
};

/// Parse the graph file format:
///   line 1: "n m"
///   then m lines "u v" or "u v alpha" (alpha in radians on the arc u->v
///   as written; stored relative to the reference orientation)
/// '#' starts a comment, blank lines are ignored. A potential is present
/// when any edge line carries a third column (others default to 0).
/// Throws ParseError with a line number; graph errors propagate.
ParsedGraph parse_graph_file(const std::string& text);

/// Inverse of parse_graph_file; doubles are printed round-trip exact.
std::string format_graph_file(const Graph& g, const std::optional<MagneticPotential>& potential);

/// CSV with header "t,lambda_1,...,lambda_n" (t1..td for a d-dimensional
/// grid), one row per grid point, 12 significant digits, byte-stable.
std::string emit_sweep_csv(const SweepResult& sweep);

/// Certificate as a single JSON object (fields mirror Certificate).
std::string certificate_to_json(const Certificate& cert);

} // namespace maglap
