#include "quasibell/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "quasibell/errors.hpp"
#include "quasibell/gates.hpp"

namespace quasibell::fock {
namespace {

void require_synthesis_inputs(double alpha, int m_cut) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("synthesis needs a positive coherent amplitude, got " +
                      std::to_string(alpha));
  }
  if (m_cut < 1) throw DomainError("photon-number cutoff M must be >= 1");
}

// Projector onto levels 0..m_cut (clipped to the space).
MatrixXc cutoff_projector(int dim, int m_cut) {
  MatrixXc lambda = MatrixXc::Zero(dim, dim);
  const int top = std::min(m_cut, dim - 1);
  for (int n = 0; n <= top; ++n) lambda(n, n) = 1.0;
  return lambda;
}

double worst_column_error(const MatrixXc& approx, const MatrixXc& exact,
                          const EvenOddCoherent& basis) {
  const MatrixXc diff = approx - exact;
  return std::max((diff * basis.even.amplitudes()).norm(),
                  (diff * basis.odd.amplitudes()).norm());
}

MatrixXc hadamard_from_generators(const MatrixXc& p, const MatrixXc& q) {
  using std::numbers::pi;
  const Complex i(0.0, 1.0);
  return -i * linalg::expm(i * (pi / 2.0) * q) * linalg::expm((pi / 4.0) * p);
}

}  // namespace

SynthesisCoefficients synthesis_coefficients(double alpha, int m_cut) {
  require_synthesis_inputs(alpha, m_cut);
  SynthesisCoefficients out;
  out.c.resize(static_cast<std::size_t>(m_cut) + 1);
  out.c[0] = std::exp(-2.0 * alpha * alpha);
  for (int n = 1; n <= m_cut; ++n) {
    out.c[n] = out.c[n - 1] * (-2.0 * alpha) / std::sqrt(static_cast<double>(n));
  }
  double kept = 0.0;
  for (int n = 1; n <= m_cut; ++n) kept += out.c[n] * out.c[n];
  const double norm = std::sqrt(kept);
  out.d.reserve(m_cut);
  for (int n = 1; n <= m_cut; ++n) out.d.push_back(out.c[n] / norm);

  // 1 - sum_{1..M} c_n^2 / (1 - c_0^2) equals the |-2 alpha> tail above M over
  // 1 - c_0^2; the tail form avoids cancellation once delta_M is tiny.
  const double excited = -std::expm1(-4.0 * alpha * alpha);
  out.delta_m = std::clamp(coherent_tail_mass(2.0 * alpha, m_cut + 1) / excited, 0.0, 1.0);
  return out;
}

int minimum_synthesis_dim(double alpha) {
  const int scale = std::max(1, static_cast<int>(std::ceil(4.0 * alpha * alpha)));
  return 4 * scale + 16;
}

FockSpace synthesis_space(double alpha) {
  return FockSpace(std::max(FockSpace::for_amplitude(alpha).dim(), minimum_synthesis_dim(alpha)));
}

FockOperator vacuum_projector_series(const FockSpace& space, int m_cut) {
  const int dim = space.dim();
  const MatrixXc a = annihilation(space).matrix();
  const MatrixXc ad = a.adjoint();
  MatrixXc a_pow = MatrixXc::Identity(dim, dim);
  MatrixXc ad_pow = MatrixXc::Identity(dim, dim);
  MatrixXc series = MatrixXc::Zero(dim, dim);
  double factorial = 1.0;
  for (int l = 0; l <= m_cut; ++l) {
    if (l > 0) {
      factorial *= l;
      a_pow = a_pow * a;
      ad_pow = ad_pow * ad;
    }
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    series += (sign / factorial) * (ad_pow * a_pow);
  }
  return FockOperator(std::move(series), space);
}

EvenOddCoherent displaced_cat_basis(double alpha, const FockSpace& space, double tail_tol) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("displaced cat basis needs a positive amplitude");
  }
  const double kappa = overlap_kappa(alpha);
  const VectorXc vacuum = coherent_state(0.0, space, tail_tol).amplitudes();
  const VectorXc far = coherent_state(-2.0 * alpha, space, tail_tol).amplitudes();
  VectorXc even = (vacuum + far) / std::sqrt(2.0 * (1.0 + kappa));
  VectorXc odd = (vacuum - far) / std::sqrt(2.0 * (1.0 - kappa));
  even /= even.norm();
  odd /= odd.norm();
  return {FockVector(std::move(even), space), FockVector(std::move(odd), space)};
}

FockOperator displaced_hadamard_exact(double alpha, const FockSpace& space, double tail_tol) {
  const EvenOddCoherent cat = even_odd_coherent(alpha, space, tail_tol);
  const int dim = space.dim();
  MatrixXc frame(dim, 2);
  frame.col(0) = cat.even.amplitudes();
  frame.col(1) = cat.odd.amplitudes();
  const MatrixXc h = hadamard_rotation().matrix();
  const MatrixXc lifted = MatrixXc::Identity(dim, dim) - frame * frame.adjoint() +
                          frame * h * frame.adjoint();
  const MatrixXc d_plus = displacement_operator(alpha, space, tail_tol).matrix();
  const MatrixXc d_minus = displacement_operator(-alpha, space, tail_tol).matrix();
  return FockOperator(d_minus * lifted * d_plus, space);
}

SynthesisResult synthesize_hadamard(double alpha, int m_cut, const FockSpace& space,
                                    double tail_tol) {
  require_synthesis_inputs(alpha, m_cut);
  const int dim = space.dim();
  if (dim < minimum_synthesis_dim(alpha)) {
    std::ostringstream msg;
    msg << "synthesis at alpha = " << alpha << " needs n_max >= " << minimum_synthesis_dim(alpha)
        << ", got " << dim;
    throw TruncationError(msg.str());
  }
  require_representable(2.0 * alpha, space, tail_tol);

  SynthesisCoefficients coeffs = synthesis_coefficients(alpha, m_cut);
  const double c0 = coeffs.c[0];
  const double s = std::sqrt(-std::expm1(-4.0 * alpha * alpha));

  const MatrixXc a = annihilation(space).matrix();
  MatrixXc lowering = MatrixXc::Zero(dim, dim);
  MatrixXc a_pow = MatrixXc::Identity(dim, dim);
  double factorial = 1.0;
  for (int n = 1; n <= m_cut; ++n) {
    a_pow = a_pow * a;
    factorial *= n;
    lowering += (coeffs.d[n - 1] / std::sqrt(factorial)) * a_pow;
  }
  const MatrixXc projector_series = vacuum_projector_series(space, m_cut).matrix();

  const MatrixXc lambda = cutoff_projector(dim, m_cut);
  const MatrixXc pi_m = lambda * projector_series * lambda;
  const MatrixXc b = lambda * (projector_series * lowering) * lambda;
  const MatrixXc bd = b.adjoint();

  MatrixXc p = bd - b;
  MatrixXc q = c0 * (pi_m - bd * b) + s * (b + bd);
  q = 0.5 * (q + q.adjoint());
  MatrixXc p_lit = -2.0 * s * (b - bd);
  MatrixXc q_lit = 4.0 * c0 * pi_m + 2.0 * s * (b + bd);

  MatrixXc u_approx = hadamard_from_generators(p, q);
  const MatrixXc u_literal = hadamard_from_generators(p_lit, q_lit);
  FockOperator u_exact = displaced_hadamard_exact(alpha, space, tail_tol);

  const EvenOddCoherent basis = displaced_cat_basis(alpha, space, tail_tol);
  const double gate_error = worst_column_error(u_approx, u_exact.matrix(), basis);
  const double literal_error = worst_column_error(u_literal, u_exact.matrix(), basis);

  return SynthesisResult{
      .alpha = alpha,
      .m_cut = m_cut,
      .coefficients = std::move(coeffs),
      .p_m = FockOperator(std::move(p), space),
      .q_m = FockOperator(std::move(q), space),
      .p_literal = FockOperator(std::move(p_lit), space),
      .q_literal = FockOperator(std::move(q_lit), space),
      .u_approx = FockOperator(std::move(u_approx), space),
      .u_exact = std::move(u_exact),
      .gate_error = gate_error,
      .literal_gate_error = literal_error,
      .converged = gate_error <= kConvergenceThreshold,
  };
}

}  // namespace quasibell::fock
