#pragma once

// Closed-form layer for quasi-Bell states over a nonorthogonal pair
// {|psi1>, |psi2>} with real overlap kappa = <psi1|psi2>.
//
// Every state is stored as four amplitudes in the orthonormal product basis
// {|ee>, |eo>, |oe>, |oo>} (first factor = subsystem A), where
//
//   |e> = (|psi1> + |psi2>) / sqrt(2(1 + kappa))
//   |o> = (|psi1> - |psi2>) / sqrt(2(1 - kappa))
//
// The sign of |o> follows the (|psi1> - |psi2>) ordering; flipping it flips the
// sign of every odd-component amplitude. States carry no phase convention of
// their own, so comparisons go through overlap moduli.

#include <array>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "quasibell/density_matrix.hpp"
#include "quasibell/linalg.hpp"

namespace quasibell {

using Vector4c = Eigen::Vector4cd;
using Matrix2c = Eigen::Matrix2cd;

/// Real overlap of the basic pair, 0 <= kappa < 1.
class OverlapPair {
 public:
  explicit OverlapPair(double kappa);

  double kappa() const { return kappa_; }

 private:
  double kappa_;
};

/// Selects one of the four quasi-Bell families:
///   1: psi1 psi2 + psi2 psi1    2: psi1 psi2 - psi2 psi1
///   3: psi1 psi1 + psi2 psi2    4: psi1 psi1 - psi2 psi2
class QuasiBellIndex {
 public:
  explicit QuasiBellIndex(int value);

  int value() const { return value_; }
  /// Families 1 and 2 pair unlike states across the cut.
  bool crossed() const { return value_ <= 2; }
  /// Families 1 and 3 add the two terms, 2 and 4 subtract them.
  bool symmetric() const { return value_ % 2 == 1; }
  double sign() const { return symmetric() ? 1.0 : -1.0; }

  friend bool operator==(QuasiBellIndex, QuasiBellIndex) = default;

 private:
  int value_;
};

/// Conversion between {|psi1>, |psi2>} and the orthonormal {|e>, |o>}.
struct EvenOddBasis {
  double kappa;
  double even_coeff;  // 1 / sqrt(2(1 + kappa))
  double odd_coeff;   // 1 / sqrt(2(1 - kappa))

  /// Components of |psi1> and |psi2> on (|e>, |o>).
  Eigen::Vector2d psi1() const;
  Eigen::Vector2d psi2() const;
};

EvenOddBasis make_even_odd_basis(const OverlapPair& pair);

/// Normalized bipartite state on {e,o} (x) {e,o}; amplitude index is 2*a + b.
class TwoQubitState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws DomainError unless the amplitudes have unit norm.
  explicit TwoQubitState(Vector4c amplitudes, std::optional<int> label = std::nullopt);

  /// Normalizes first; throws ZeroNormState if the norm is below 1e-14.
  static TwoQubitState normalized(const Vector4c& amplitudes,
                                  std::optional<int> label = std::nullopt);

  const Vector4c& amplitudes() const { return amplitudes_; }
  Complex amplitude(int a, int b) const { return amplitudes_(2 * a + b); }
  const std::optional<int>& label() const { return label_; }

  /// Coefficient matrix M(a, b); rho_A = M M^dag.
  Matrix2c coefficient_matrix() const;

  /// <this|other>.
  Complex overlap(const TwoQubitState& other) const;

 private:
  Vector4c amplitudes_;
  std::optional<int> label_;
};

/// Weight of the first term in the general (unbalanced) superposition.
class GeneralWeights {
 public:
  explicit GeneralWeights(double beta);

  double beta() const { return beta_; }
  double complement() const;  // sqrt(1 - beta^2)

 private:
  double beta_;
};

TwoQubitState quasi_bell_state(const OverlapPair& pair, QuasiBellIndex index);

/// Closed-form Gram matrix: identity except (1,3) = (3,1) = 2 kappa / (1 + kappa^2).
Eigen::Matrix4d gram_matrix(const OverlapPair& pair);

/// beta |x1 y1> +- sqrt(1 - beta^2) |x2 y2>, normalized. Throws ZeroNormState
/// when the superposition cancels.
TwoQubitState general_state(const OverlapPair& pair, const GeneralWeights& weights,
                            QuasiBellIndex family);

/// Normalization constant of the reduced operator of general_state,
/// 1 / (1 +- 2 kappa^2 beta sqrt(1 - beta^2)).
double general_reduced_normalization(const OverlapPair& pair, const GeneralWeights& weights,
                                     QuasiBellIndex family);

/// Partial trace over subsystem B.
DensityMatrix reduced_density(const TwoQubitState& state);

/// Closed-form reduced eigenvalues (lambda1 >= lambda2).
std::pair<double, double> reduced_eigenvalues(const OverlapPair& pair, QuasiBellIndex index);

/// Binary entropy in bits. Throws DomainError outside [-1e-12, 1 + 1e-12];
/// values within that band are clamped to [0, 1].
double entropy_function(double x);

/// Entropy of entanglement in bits.
double entropy_of_entanglement(const TwoQubitState& state);

/// |<Psi| sigma_y (x) sigma_y |Psi*>| = 2 |M_ee M_oo - M_eo M_oe|.
double concurrence(const TwoQubitState& state);

/// H[(1 + sqrt(1 - C^2)) / 2].
double entropy_from_concurrence(double c);

}  // namespace quasibell
