#include "quasibell/characteristic.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "quasibell/errors.hpp"

namespace quasibell::fock {
namespace {

void require_displacement_fits(Complex z, const FockSpace& space, double tail_tol) {
  const double tail = coherent_tail_mass(std::abs(z), space.dim());
  if (!(tail < tail_tol)) {
    std::ostringstream msg;
    msg << "characteristic function: |z| = " << std::abs(z) << " too large for n_max = " << space.dim()
        << " (tail " << tail << ")";
    throw TruncationError(msg.str());
  }
}

// e^{w a^dag}: entry (m, n) = w^{m-n} sqrt(m!/n!) / (m-n)! for m >= n.
MatrixXc raising_exponential(Complex w, int dim) {
  MatrixXc out = MatrixXc::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    Complex term = 1.0;
    out(n, n) = term;
    for (int m = n + 1; m < dim; ++m) {
      term *= w * std::sqrt(static_cast<double>(m)) / static_cast<double>(m - n);
      out(m, n) = term;
    }
  }
  return out;
}

// e^{z a^dag} e^{-z* a}. Both factors are triangular, so the truncated product
// equals the truncation of the exact operator.
MatrixXc normal_ordered_displacement(Complex z, const FockSpace& space) {
  const int dim = space.dim();
  // e^{w a} is the transpose of e^{w a^dag}.
  return raising_exponential(z, dim) * raising_exponential(-std::conj(z), dim).transpose();
}

MatrixXc quadrature(Complex z, const FockSpace& space) {
  const MatrixXc a = annihilation(space).matrix();
  return z * a.adjoint() - std::conj(z) * a;
}

}  // namespace

Complex characteristic_function_numeric(const TwoModeState& state, Complex xi, Complex eta,
                                        double tail_tol) {
  const FockSpace& space = state.space();
  require_displacement_fits(xi, space, tail_tol);
  require_displacement_fits(eta, space, tail_tol);
  const MatrixXc& c = state.coefficients();
  const MatrixXc image =
      normal_ordered_displacement(xi, space) * c * normal_ordered_displacement(eta, space).transpose();
  const Complex expectation = (c.conjugate().cwiseProduct(image)).sum();
  return expectation * std::exp(-0.5 * (std::norm(xi) + std::norm(eta)));
}

Complex characteristic_function_closed(QuasiBellIndex index, double alpha, Complex xi,
                                       Complex eta) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw DomainError("coherent amplitude must be real and non-negative");
  }
  const double kappa = overlap_kappa(alpha);
  const double k2 = kappa * kappa;
  const double norm_sq = index.symmetric() ? 2.0 * (1.0 + k2) : 2.0 * (1.0 - k2);
  if (norm_sq < 1e-14) {
    throw DegenerateState("quasi-Bell state " + std::to_string(index.value()) +
                          " vanishes at alpha = 0 (kappa = 1)");
  }
  const Complex a1 = xi - std::conj(xi);
  const Complex a2 = xi + std::conj(xi);
  const Complex b1 = eta - std::conj(eta);
  const Complex b2 = eta + std::conj(eta);
  // Families 1, 2 put |-alpha> on B opposite |alpha> on A.
  const double s = index.crossed() ? 1.0 : -1.0;
  const Complex diag_arg = alpha * (a1 - s * b1);
  const Complex cross_arg = alpha * (a2 - s * b2);
  const Complex braces = std::exp(diag_arg) + std::exp(-diag_arg) +
                         index.sign() * k2 * (std::exp(cross_arg) + std::exp(-cross_arg));
  return braces / norm_sq * std::exp(-0.5 * (std::norm(xi) + std::norm(eta)));
}

Complex gaussian_characteristic(const TwoModeState& state, Complex xi, Complex eta) {
  const FockSpace& space = state.space();
  const MatrixXc& c = state.coefficients();
  const MatrixXc lc = quadrature(xi, space) * c + c * quadrature(eta, space).transpose();
  const Complex mean = (c.conjugate().cwiseProduct(lc)).sum();
  // L is anti-Hermitian, so <L^2> = -||L psi||^2.
  const double second = -lc.squaredNorm();
  return std::exp(mean + 0.5 * (second - mean * mean));
}

}  // namespace quasibell::fock
