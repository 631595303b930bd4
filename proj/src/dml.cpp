#include "maglap/dml.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace maglap {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

double Spectrum::lambda(int k) const {
  if (k < 1 || k > size())
    throw Error(Error::Code::BadShift,
                "eigenvalue index " + std::to_string(k) + " outside 1.." + std::to_string(size()));
  return values_[static_cast<size_t>(k - 1)];
}

HermitianMatrix build_dml(const MagneticGraph& mg) {
  const Graph& g = mg.graph;
  HermitianMatrix h(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) h.set_diagonal(v, g.degree(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    double a = mg.potential.value(e);
    h.set_off_diagonal(ed.u, ed.v, -std::exp(std::complex<double>(0.0, a)));
  }
  return h;
}

EigenpairReport verify_eigenpairs(const HermitianMatrix& h, const Eigen::VectorXd& eigenvalues,
                                  const Eigen::MatrixXcd& eigenvectors) {
  EigenpairReport r;
  const int n = h.dimension();
  r.matrix_norm = eigenvalues.cwiseAbs().maxCoeff();
  Eigen::MatrixXcd resid = h.matrix() * eigenvectors - eigenvectors * eigenvalues.asDiagonal();
  for (int k = 0; k < n; ++k) r.max_residual = std::max(r.max_residual, resid.col(k).norm());
  Eigen::MatrixXcd gram = eigenvectors.adjoint() * eigenvectors;
  gram -= Eigen::MatrixXcd::Identity(n, n);
  r.orthogonality_defect = gram.cwiseAbs().maxCoeff();
  r.pass = r.max_residual <= eps_eigen * r.matrix_norm &&
           r.orthogonality_defect <= eps_eigen * std::max(r.matrix_norm, 1.0);
  return r;
}

Spectrum spectrum(const MagneticGraph& mg) {
  HermitianMatrix h = build_dml(mg);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw Error(Error::Code::EigenSolverFailure, "hermitian eigensolver did not converge");
  EigenpairReport report = verify_eigenpairs(h, solver.eigenvalues(), solver.eigenvectors());
  if (!report.pass)
    throw Error(Error::Code::EigenSolverFailure,
                "eigenpair residual " + std::to_string(report.max_residual) + " exceeds tolerance");
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + h.dimension());
  return Spectrum(std::move(vals));
}

Spectrum spectrum(const Graph& g, const MagneticPotential& alpha) {
  return spectrum(MagneticGraph(g, alpha));
}

Spectrum cycle_spectrum_closed_form(int n, double flux) {
  if (n < 3)
    throw Error(Error::Code::CycleTooSmall, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<double> vals(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) vals[k] = 2.0 - 2.0 * std::cos((two_pi * k + flux) / n);
  return Spectrum(std::move(vals));
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw Error(Error::Code::CycleTooSmall, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pairs.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, pairs);
}

} // namespace maglap
