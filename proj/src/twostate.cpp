#include "quasibell/twostate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quasibell/errors.hpp"

namespace quasibell {
namespace {

constexpr double kZeroNorm = 1e-14;
constexpr double kEntropyBand = 1e-12;

// |x> (x) |y> for single-subsystem components on (|e>, |o>).
Vector4c product(const Eigen::Vector2d& x, const Eigen::Vector2d& y) {
  Vector4c out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out(2 * a + b) = x(a) * y(b);
  }
  return out;
}

// The two product terms of a family, before weighting.
std::pair<Vector4c, Vector4c> family_terms(const EvenOddBasis& basis, QuasiBellIndex index) {
  const Eigen::Vector2d p1 = basis.psi1();
  const Eigen::Vector2d p2 = basis.psi2();
  if (index.crossed()) return {product(p1, p2), product(p2, p1)};
  return {product(p1, p1), product(p2, p2)};
}

}  // namespace

OverlapPair::OverlapPair(double kappa) : kappa_(kappa) {
  if (!std::isfinite(kappa) || kappa < 0.0 || kappa >= 1.0) {
    throw DomainError("overlap kappa must satisfy 0 <= kappa < 1, got " + std::to_string(kappa));
  }
}

QuasiBellIndex::QuasiBellIndex(int value) : value_(value) {
  if (value < 1 || value > 4) {
    throw DomainError("quasi-Bell index must be in 1..4, got " + std::to_string(value));
  }
}

Eigen::Vector2d EvenOddBasis::psi1() const {
  return {std::sqrt((1.0 + kappa) / 2.0), std::sqrt((1.0 - kappa) / 2.0)};
}

Eigen::Vector2d EvenOddBasis::psi2() const {
  return {std::sqrt((1.0 + kappa) / 2.0), -std::sqrt((1.0 - kappa) / 2.0)};
}

EvenOddBasis make_even_odd_basis(const OverlapPair& pair) {
  const double k = pair.kappa();
  return {k, 1.0 / std::sqrt(2.0 * (1.0 + k)), 1.0 / std::sqrt(2.0 * (1.0 - k))};
}

TwoQubitState::TwoQubitState(Vector4c amplitudes, std::optional<int> label)
    : amplitudes_(std::move(amplitudes)), label_(label) {
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw DomainError("TwoQubitState: amplitudes not normalized (norm " + std::to_string(norm) +
                      ")");
  }
}

TwoQubitState TwoQubitState::normalized(const Vector4c& amplitudes, std::optional<int> label) {
  const double norm = amplitudes.norm();
  if (!(norm >= kZeroNorm)) {
    throw ZeroNormState("superposition has zero norm");
  }
  return TwoQubitState(amplitudes / norm, label);
}

Matrix2c TwoQubitState::coefficient_matrix() const {
  Matrix2c m;
  m << amplitudes_(0), amplitudes_(1), amplitudes_(2), amplitudes_(3);
  return m;
}

Complex TwoQubitState::overlap(const TwoQubitState& other) const {
  return amplitudes_.dot(other.amplitudes_);
}

GeneralWeights::GeneralWeights(double beta) : beta_(beta) {
  if (!std::isfinite(beta) || beta < 0.0 || beta > 1.0) {
    throw DomainError("beta must lie in [0, 1], got " + std::to_string(beta));
  }
}

double GeneralWeights::complement() const {
  return std::sqrt(std::max(0.0, 1.0 - beta_ * beta_));
}

TwoQubitState quasi_bell_state(const OverlapPair& pair, QuasiBellIndex index) {
  const double k = pair.kappa();
  const auto [first, second] = family_terms(make_even_odd_basis(pair), index);
  const double h = index.symmetric() ? 1.0 / std::sqrt(2.0 * (1.0 + k * k))
                                     : 1.0 / std::sqrt(2.0 * (1.0 - k * k));
  return TwoQubitState(h * (first + index.sign() * second), index.value());
}

Eigen::Matrix4d gram_matrix(const OverlapPair& pair) {
  const double k = pair.kappa();
  Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
  g(0, 2) = g(2, 0) = 2.0 * k / (1.0 + k * k);
  return g;
}

TwoQubitState general_state(const OverlapPair& pair, const GeneralWeights& weights,
                            QuasiBellIndex family) {
  const auto [first, second] = family_terms(make_even_odd_basis(pair), family);
  const Vector4c raw = weights.beta() * first + family.sign() * weights.complement() * second;
  return TwoQubitState::normalized(raw);
}

double general_reduced_normalization(const OverlapPair& pair, const GeneralWeights& weights,
                                     QuasiBellIndex family) {
  const double k = pair.kappa();
  const double norm_sq =
      1.0 + family.sign() * 2.0 * k * k * weights.beta() * weights.complement();
  if (norm_sq < kZeroNorm) throw ZeroNormState("superposition has zero norm");
  return 1.0 / norm_sq;
}

DensityMatrix reduced_density(const TwoQubitState& state) {
  const Matrix2c m = state.coefficient_matrix();
  return DensityMatrix(m * m.adjoint());
}

std::pair<double, double> reduced_eigenvalues(const OverlapPair& pair, QuasiBellIndex index) {
  if (!index.symmetric()) return {0.5, 0.5};
  const double k = pair.kappa();
  const double denom = 2.0 * (1.0 + k * k);
  return {(1.0 + k) * (1.0 + k) / denom, (1.0 - k) * (1.0 - k) / denom};
}

double entropy_function(double x) {
  if (!(x >= -kEntropyBand && x <= 1.0 + kEntropyBand)) {
    throw DomainError("entropy_function: argument outside [0, 1]: " + std::to_string(x));
  }
  x = std::clamp(x, 0.0, 1.0);
  const double p[] = {x, 1.0 - x};
  return linalg::entropy_bits(p);
}

double entropy_of_entanglement(const TwoQubitState& state) {
  return reduced_density(state).entropy();
}

double concurrence(const TwoQubitState& state) {
  const Vector4c& a = state.amplitudes();
  return std::min(1.0, 2.0 * std::abs(a(0) * a(3) - a(1) * a(2)));
}

double entropy_from_concurrence(double c) {
  const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
  return entropy_function(0.5 * (1.0 + root));
}

}  // namespace quasibell
