#include "maglap/preorder.hpp"

#include <limits>
#include <string>

namespace maglap {

PreorderVerdict spectrally_less(const Spectrum& a, const Spectrum& b, int r) {
  if (a.size() != b.size())
    throw Error(Error::Code::SizeMismatch, "spectra have different sizes");
  const int n = a.size();
  if (r < 0 || r > n)
    throw Error(Error::Code::BadShift, "shift " + std::to_string(r) + " outside 0..n");

  PreorderVerdict v;
  v.holds = true;
  v.margin = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n - r; ++k) {
    double gap = b.lambda(k + r) - a.lambda(k);
    v.margin = std::min(v.margin, gap);
    if (v.holds && gap < -delta_certificate) {
      v.holds = false;
      v.failing_index = k;
    }
  }
  return v;
}

MagneticGraph delete_edge(const MagneticGraph& mg, EdgeId e) { return delete_edges(mg, {e}); }

MagneticGraph delete_edges(const MagneticGraph& mg, const std::vector<EdgeId>& es) {
  Graph g = mg.graph.delete_edges(es); // validates the ids
  std::vector<char> drop(mg.graph.edge_count(), 0);
  for (EdgeId e : es) drop[e] = 1;
  std::vector<double> vals;
  vals.reserve(g.edge_count());
  for (EdgeId e = 0; e < mg.graph.edge_count(); ++e)
    if (!drop[e]) vals.push_back(mg.potential.value(e));
  return MagneticGraph(std::move(g), MagneticPotential(std::move(vals)));
}

std::pair<PreorderVerdict, PreorderVerdict> check_deletion_interlacing(const MagneticGraph& mg,
                                                                       EdgeId e) {
  MagneticGraph reduced = delete_edge(mg, e);
  Spectrum full = spectrum(mg);
  Spectrum less = spectrum(reduced);
  return {spectrally_less(less, full, 0), spectrally_less(full, less, 1)};
}

} // namespace maglap
