#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace quasibell {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

namespace linalg {

/// Matrix exponential by Pade scaling-and-squaring (Higham 2005). Picks the
/// lowest Pade degree in {3, 5, 7, 9, 13} whose 1-norm bound covers the input
/// and scales only when degree 13 is insufficient.
MatrixXc expm(const MatrixXc& a);

/// Eigenvalues of a Hermitian matrix, sorted in descending order.
std::vector<double> hermitian_eigenvalues(const MatrixXc& m);

/// Shannon entropy in bits of a probability vector. Entries in
/// [-clamp_tol, 0) are treated as zero; anything more negative throws
/// DomainError.
double entropy_bits(std::span<const double> probabilities, double clamp_tol = 1e-12);

double hermiticity_error(const MatrixXc& m);
double unitarity_error(const MatrixXc& m);

/// <u|v> with the bra conjugated.
Complex inner(const VectorXc& u, const VectorXc& v);

/// Kronecker product a (x) b.
MatrixXc kron(const MatrixXc& a, const MatrixXc& b);

}  // namespace linalg
}  // namespace quasibell
