#pragma once

#include <optional>
#include <utility>

#include "maglap/dml.hpp"

namespace maglap {

/// Outcome of a shifted spectral comparison A <=_r B.
struct PreorderVerdict {
  bool holds = false;
  /// First k with lambda_k(A) > lambda_{k+r}(B) + delta_certificate.
  std::optional<int> failing_index;
  /// min over k of lambda_{k+r}(B) - lambda_k(A); +inf when no k applies.
  double margin = 0.0;
};

/// Check lambda_k(A) <= lambda_{k+r}(B) + delta_certificate for all
/// 1 <= k <= n-r. Throws SizeMismatch, BadShift.
PreorderVerdict spectrally_less(const Spectrum& a, const Spectrum& b, int r);

/// For G' = G - e with the restricted potential, verify G' <= G and
/// G <=_1 G'. Returns {G' <= G, G <=_1 G'}. Throws BadEdgeId.
std::pair<PreorderVerdict, PreorderVerdict> check_deletion_interlacing(const MagneticGraph& mg,
                                                                       EdgeId e);

/// Delete edge e keeping the potential on the remaining edges.
MagneticGraph delete_edge(const MagneticGraph& mg, EdgeId e);
MagneticGraph delete_edges(const MagneticGraph& mg, const std::vector<EdgeId>& es);

} // namespace maglap
