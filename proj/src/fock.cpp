#include "quasibell/fock.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "quasibell/errors.hpp"

namespace quasibell::fock {
namespace {

constexpr double kStateNormTolerance = 1e-10;
constexpr double kDegenerateNormSq = 1e-14;

void require_same_space(const FockSpace& a, const FockSpace& b) {
  if (!(a == b)) throw DomainError("operands live in different Fock spaces");
}

void require_nonnegative_amplitude(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw DomainError("coherent amplitude must be real and non-negative, got " +
                      std::to_string(alpha));
  }
}

}  // namespace

FockSpace::FockSpace(int n_max) : n_max_(n_max) {
  if (n_max < 2) {
    throw DomainError("Fock space needs at least 2 levels, got " + std::to_string(n_max));
  }
}

FockSpace FockSpace::for_amplitude(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("non-finite coherent amplitude");
  const double two_alpha = 2.0 * std::abs(alpha);
  return FockSpace(static_cast<int>(std::ceil(two_alpha * two_alpha + 8.0 * two_alpha + 20.0)));
}

FockVector::FockVector(VectorXc amplitudes, FockSpace space)
    : amplitudes_(std::move(amplitudes)), space_(space) {
  if (amplitudes_.size() != space_.dim()) {
    throw DomainError("FockVector: amplitude count does not match the space dimension");
  }
  const double norm = amplitudes_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kStateNormTolerance) {
    throw DomainError("FockVector: not normalized (norm " + std::to_string(norm) + ")");
  }
}

double FockVector::mean_photon_number() const {
  double n = 0.0;
  for (Eigen::Index k = 0; k < amplitudes_.size(); ++k) {
    n += static_cast<double>(k) * std::norm(amplitudes_(k));
  }
  return n;
}

TwoModeState::TwoModeState(MatrixXc coefficients, FockSpace space)
    : coefficients_(std::move(coefficients)), space_(space) {
  if (coefficients_.rows() != space_.dim() || coefficients_.cols() != space_.dim()) {
    throw DomainError("TwoModeState: coefficient matrix does not match the space dimension");
  }
  const double norm = coefficients_.norm();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kStateNormTolerance) {
    throw DomainError("TwoModeState: not normalized (norm " + std::to_string(norm) + ")");
  }
}

Complex TwoModeState::overlap(const TwoModeState& other) const {
  require_same_space(space_, other.space_);
  return (coefficients_.conjugate().cwiseProduct(other.coefficients_)).sum();
}

FockOperator::FockOperator(MatrixXc entries, FockSpace space)
    : entries_(std::move(entries)), space_(space) {
  if (entries_.rows() != space_.dim() || entries_.cols() != space_.dim()) {
    throw DomainError("FockOperator: matrix does not match the space dimension");
  }
}

FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs) {
  require_same_space(lhs.space_, rhs.space_);
  return FockOperator(lhs.entries_ * rhs.entries_, lhs.space_);
}

double overlap_kappa(double alpha) { return std::exp(-2.0 * alpha * alpha); }

double coherent_tail_mass(double alpha, int n_max) {
  const double mean = alpha * alpha;
  if (mean == 0.0) return n_max > 0 ? 0.0 : 1.0;
  // Poisson(mean) tail, accumulated in log space from n_max upward until
  // the terms are negligible and decreasing.
  double tail = 0.0;
  const double log_mean = std::log(mean);
  for (int n = std::max(n_max, 0);; ++n) {
    const double term = std::exp(-mean + n * log_mean - std::lgamma(n + 1.0));
    tail += term;
    if (n > mean && term < std::numeric_limits<double>::min() * 1e16) break;
    if (n > mean && term < tail * 1e-18) break;
  }
  return tail;
}

void require_representable(double alpha, const FockSpace& space, double tail_tol) {
  const double tail = coherent_tail_mass(alpha, space.dim());
  if (!(tail < tail_tol)) {
    std::ostringstream msg;
    msg << "truncation n_max = " << space.dim() << " too small for coherent amplitude "
        << alpha << " (tail mass " << tail << " >= " << tail_tol << ")";
    throw TruncationError(msg.str());
  }
}

FockOperator annihilation(const FockSpace& space) {
  const int n = space.dim();
  MatrixXc a = MatrixXc::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return FockOperator(std::move(a), space);
}

FockOperator creation(const FockSpace& space) {
  return FockOperator(annihilation(space).matrix().adjoint(), space);
}

FockOperator number_operator(const FockSpace& space) {
  const int n = space.dim();
  MatrixXc num = MatrixXc::Zero(n, n);
  for (int k = 0; k < n; ++k) num(k, k) = static_cast<double>(k);
  return FockOperator(std::move(num), space);
}

FockVector coherent_state(double alpha, const FockSpace& space, double tail_tol) {
  if (!std::isfinite(alpha)) throw DomainError("non-finite coherent amplitude");
  require_representable(alpha, space, tail_tol);
  const int n = space.dim();
  VectorXc amps(n);
  double amp = std::exp(-0.5 * alpha * alpha);
  amps(0) = amp;
  for (int k = 1; k < n; ++k) {
    amp *= alpha / std::sqrt(static_cast<double>(k));
    amps(k) = amp;
  }
  amps /= amps.norm();
  return FockVector(std::move(amps), space);
}

FockOperator displacement_operator(double alpha, const FockSpace& space, double tail_tol) {
  if (!std::isfinite(alpha)) throw DomainError("non-finite displacement amplitude");
  require_representable(alpha, space, tail_tol);
  const MatrixXc a = annihilation(space).matrix();
  const MatrixXc generator = alpha * (a.adjoint() - a);
  return FockOperator(linalg::expm(generator), space);
}

TwoModeState quasi_bell_coherent(QuasiBellIndex index, double alpha, const FockSpace& space,
                                 double tail_tol) {
  require_nonnegative_amplitude(alpha);
  const double kappa = overlap_kappa(alpha);
  const double norm_sq = index.symmetric() ? 2.0 * (1.0 + kappa * kappa)
                                           : 2.0 * (1.0 - kappa * kappa);
  if (norm_sq < kDegenerateNormSq) {
    throw DegenerateState("quasi-Bell state " + std::to_string(index.value()) +
                          " vanishes at alpha = " + std::to_string(alpha) + " (kappa = 1)");
  }
  const VectorXc plus = coherent_state(alpha, space, tail_tol).amplitudes();
  const VectorXc minus = coherent_state(-alpha, space, tail_tol).amplitudes();

  MatrixXc coeffs = index.crossed() ? MatrixXc(plus * minus.transpose())
                                    : MatrixXc(plus * plus.transpose());
  coeffs += index.sign() * (index.crossed() ? MatrixXc(minus * plus.transpose())
                                            : MatrixXc(minus * minus.transpose()));
  coeffs *= 1.0 / std::sqrt(norm_sq);
  // h_i is exact for the untruncated states; the renormalization below only
  // absorbs the (< tail_tol) truncated weight.
  coeffs /= coeffs.norm();
  return TwoModeState(std::move(coeffs), space);
}

DensityMatrix partial_trace(const TwoModeState& state, Subsystem keep) {
  const MatrixXc& c = state.coefficients();
  if (keep == Subsystem::A) return DensityMatrix(c * c.adjoint());
  return DensityMatrix((c.adjoint() * c).transpose());
}

double mean_photon_number(QuasiBellIndex index, double alpha, const FockSpace& space,
                          double tail_tol) {
  const DensityMatrix rho = partial_trace(quasi_bell_coherent(index, alpha, space, tail_tol),
                                          Subsystem::A);
  double n = 0.0;
  for (Eigen::Index k = 0; k < rho.dim(); ++k) n += static_cast<double>(k) * rho(k, k).real();
  return n;
}

double mean_photon_number_closed(QuasiBellIndex index, double alpha) {
  require_nonnegative_amplitude(alpha);
  const double k2 = std::pow(overlap_kappa(alpha), 2);
  if (!index.symmetric() && 1.0 - k2 < kDegenerateNormSq) {
    throw DegenerateState("quasi-Bell state " + std::to_string(index.value()) +
                          " vanishes at alpha = 0 (kappa = 1)");
  }
  const double ratio = index.symmetric() ? (1.0 - k2) / (1.0 + k2) : (1.0 + k2) / (1.0 - k2);
  return ratio * alpha * alpha;
}

EvenOddCoherent even_odd_coherent(double alpha, const FockSpace& space, double tail_tol) {
  require_nonnegative_amplitude(alpha);
  if (alpha == 0.0) throw DegenerateState("odd coherent state vanishes at alpha = 0");
  const double kappa = overlap_kappa(alpha);
  const VectorXc plus = coherent_state(alpha, space, tail_tol).amplitudes();
  const VectorXc minus = coherent_state(-alpha, space, tail_tol).amplitudes();
  VectorXc even = (plus + minus) / std::sqrt(2.0 * (1.0 + kappa));
  VectorXc odd = (plus - minus) / std::sqrt(2.0 * (1.0 - kappa));
  even /= even.norm();
  odd /= odd.norm();
  return {FockVector(std::move(even), space), FockVector(std::move(odd), space)};
}

}  // namespace quasibell::fock
