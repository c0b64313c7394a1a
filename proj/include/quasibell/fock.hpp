#pragma once

// Truncated bosonic modes. A single mode keeps levels 0..n_max-1; two-mode
// states are stored as an n_max x n_max coefficient matrix C with
// |Psi> = sum_jk C(j, k) |j>_A |k>_B.
//
// Amplitudes are real throughout the coherent-state paths (alpha real), so
// displacement phases vanish.

#include "quasibell/density_matrix.hpp"
#include "quasibell/linalg.hpp"
#include "quasibell/twostate.hpp"

namespace quasibell::fock {

inline constexpr double kDefaultTailTolerance = 1e-12;

class FockSpace {
 public:
  explicit FockSpace(int n_max);

  /// ceil((2 alpha)^2 + 8 (2 alpha) + 20): leaves room for |-2 alpha> as well
  /// as |alpha>.
  static FockSpace for_amplitude(double alpha);

  int dim() const { return n_max_; }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int n_max_;
};

/// Normalized single-mode vector.
class FockVector {
 public:
  FockVector(VectorXc amplitudes, FockSpace space);

  const VectorXc& amplitudes() const { return amplitudes_; }
  const FockSpace& space() const { return space_; }
  Complex operator[](Eigen::Index n) const { return amplitudes_(n); }

  Complex overlap(const FockVector& other) const { return amplitudes_.dot(other.amplitudes_); }
  double mean_photon_number() const;

 private:
  VectorXc amplitudes_;
  FockSpace space_;
};

/// Normalized two-mode vector.
class TwoModeState {
 public:
  TwoModeState(MatrixXc coefficients, FockSpace space);

  const MatrixXc& coefficients() const { return coefficients_; }
  const FockSpace& space() const { return space_; }

  Complex overlap(const TwoModeState& other) const;

 private:
  MatrixXc coefficients_;
  FockSpace space_;
};

class FockOperator {
 public:
  FockOperator(MatrixXc entries, FockSpace space);

  const MatrixXc& matrix() const { return entries_; }
  const FockSpace& space() const { return space_; }

  /// Unnormalized image of a vector.
  VectorXc apply(const VectorXc& v) const { return entries_ * v; }

  friend FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs);

 private:
  MatrixXc entries_;
  FockSpace space_;
};

enum class Subsystem { A, B };

/// exp(-2 alpha^2) = <alpha|-alpha>.
double overlap_kappa(double alpha);

/// Poisson weight of |alpha> above the truncation: sum_{n >= n_max} |<n|alpha>|^2.
double coherent_tail_mass(double alpha, int n_max);

/// Throws TruncationError if |alpha> loses more than tail_tol above the cutoff.
void require_representable(double alpha, const FockSpace& space,
                           double tail_tol = kDefaultTailTolerance);

FockOperator annihilation(const FockSpace& space);
FockOperator creation(const FockSpace& space);
FockOperator number_operator(const FockSpace& space);

/// e^{-alpha^2/2} alpha^n / sqrt(n!), renormalized on the truncated space.
FockVector coherent_state(double alpha, const FockSpace& space,
                          double tail_tol = kDefaultTailTolerance);

/// exp(alpha (a^dag - a)) on the truncated space.
FockOperator displacement_operator(double alpha, const FockSpace& space,
                                   double tail_tol = kDefaultTailTolerance);

/// Quasi-Bell states over {|alpha>, |-alpha>}, kappa = exp(-2 alpha^2).
/// Throws DomainError for alpha < 0 and DegenerateState for the
/// antisymmetric families when kappa rounds to 1.
TwoModeState quasi_bell_coherent(QuasiBellIndex index, double alpha, const FockSpace& space,
                                 double tail_tol = kDefaultTailTolerance);

DensityMatrix partial_trace(const TwoModeState& state, Subsystem keep);

/// Tr[rho_A a^dag a] from the truncated two-mode state.
double mean_photon_number(QuasiBellIndex index, double alpha, const FockSpace& space,
                          double tail_tol = kDefaultTailTolerance);

/// (1 - kappa^2)/(1 + kappa^2) alpha^2 for the symmetric families,
/// (1 + kappa^2)/(1 - kappa^2) alpha^2 for the antisymmetric ones.
double mean_photon_number_closed(QuasiBellIndex index, double alpha);

struct EvenOddCoherent {
  FockVector even;
  FockVector odd;
};

/// (|alpha> +- |-alpha>) / sqrt(2 (1 +- kappa)); requires alpha > 0.
EvenOddCoherent even_odd_coherent(double alpha, const FockSpace& space,
                                  double tail_tol = kDefaultTailTolerance);

}  // namespace quasibell::fock
