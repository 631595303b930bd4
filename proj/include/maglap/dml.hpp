#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "maglap/potential.hpp"

namespace maglap {

/// Hermitian matrix with symmetry enforced structurally: off-diagonal
/// writes set both (u,v) and its conjugate at (v,u); diagonal is real.
class HermitianMatrix {
public:
  explicit HermitianMatrix(int dimension)
      : m_(Eigen::MatrixXcd::Zero(dimension, dimension)) {}

  int dimension() const noexcept { return static_cast<int>(m_.rows()); }

  void set_diagonal(int v, double x) { m_(v, v) = x; }
  void set_off_diagonal(int u, int v, std::complex<double> z) {
    m_(u, v) = z;
    m_(v, u) = std::conj(z);
  }

  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }

private:
  Eigen::MatrixXcd m_;
};

/// Ascending, multiplicity-repeated eigenvalue list with the 1-based
/// accessor lambda(k).
class Spectrum {
public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// k-th smallest eigenvalue, 1-based; throws BadShift when out of range.
  double lambda(int k) const;
  const std::vector<double>& values() const noexcept { return values_; }

private:
  std::vector<double> values_;
};

/// Residual report for a computed eigendecomposition.
struct EigenpairReport {
  double max_residual = 0.0;        // max_k ||H v_k - lambda_k v_k||_2
  double orthogonality_defect = 0.0; // max |(V*V - I)_ij|
  double matrix_norm = 0.0;          // spectral norm, max |lambda|
  bool pass = false;                 // both defects <= eps_eigen * norm
};

/// The magnetic Laplacian of mg: deg(v) on the diagonal, -e^{i alpha_e}
/// at (u,v) for the reference arc u->v of each edge.
HermitianMatrix build_dml(const MagneticGraph& mg);

/// Check solver output against H; pass iff residual and orthogonality
/// defect are both within eps_eigen * ||H||_2.
EigenpairReport verify_eigenpairs(const HermitianMatrix& h, const Eigen::VectorXd& eigenvalues,
                                  const Eigen::MatrixXcd& eigenvectors);

/// Full ascending spectrum of build_dml(mg); every eigenpair is
/// residual-checked. Throws EigenSolverFailure.
Spectrum spectrum(const MagneticGraph& mg);

/// Convenience: spectrum of (g, alpha).
Spectrum spectrum(const Graph& g, const MagneticPotential& alpha);

/// Eigenvalues of the cycle C_n carrying total flux phi:
/// 2 - 2 cos((2 pi k + phi)/n), k = 0..n-1, sorted. Throws CycleTooSmall.
Spectrum cycle_spectrum_closed_form(int n, double flux);

/// Cycle graph 0-1-...-(n-1)-0. Throws CycleTooSmall.
Graph cycle_graph(int n);

} // namespace maglap
