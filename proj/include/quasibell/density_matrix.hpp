#pragma once

#include <vector>

#include "quasibell/linalg.hpp"

namespace quasibell {

/// Hermitian, positive semidefinite, unit-trace matrix. Validated on
/// construction; eigenvalues are computed once and cached (descending,
/// with values in [-tol, 0) clamped to zero).
class DensityMatrix {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  explicit DensityMatrix(MatrixXc entries, double tol = kDefaultTolerance);

  Eigen::Index dim() const { return entries_.rows(); }
  const MatrixXc& matrix() const { return entries_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  /// von Neumann entropy in bits.
  double entropy() const;

  double trace() const { return entries_.trace().real(); }

 private:
  MatrixXc entries_;
  std::vector<double> eigenvalues_;
};

}  // namespace quasibell
