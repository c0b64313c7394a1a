#include "quasibell/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "quasibell/errors.hpp"

namespace quasibell {

DensityMatrix::DensityMatrix(MatrixXc entries, double tol) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw DomainError("DensityMatrix: entries must form a non-empty square matrix");
  }
  const double herm = linalg::hermiticity_error(entries_);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max |rho - rho^dag| = " << herm << ")";
    throw DomainError(msg.str());
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr.real() << " differs from 1";
    throw DomainError(msg.str());
  }
  // Symmetrize away the rounding-level anti-Hermitian part before the solve.
  const MatrixXc herm_part = 0.5 * (entries_ + entries_.adjoint());
  eigenvalues_ = linalg::hermitian_eigenvalues(herm_part);
  for (double& ev : eigenvalues_) {
    if (ev < -tol) {
      std::ostringstream msg;
      msg << "DensityMatrix: negative eigenvalue " << ev;
      throw DomainError(msg.str());
    }
    if (ev < 0.0) ev = 0.0;
  }
}

double DensityMatrix::entropy() const { return linalg::entropy_bits(eigenvalues_); }

}  // namespace quasibell
