#pragma once

// Nonlinear-Hamiltonian synthesis of the cat-qubit Hadamard gate in the
// displaced frame U~ = D(-alpha) U_H D(alpha), where the qubit is spanned by
// |0> and |-2 alpha> = sum_n c_n |n>.
//
// Building blocks, both truncated at the photon-number cutoff M:
//
//   Pi_M = sum_{l=0}^{M} (-a^dag)^l a^l / l!     (vacuum projector on n <= M)
//   B    = Pi_M sum_{n=1}^{M} d_n a^n / sqrt(n!) (= |0><phi_M| on n <= M)
//
// with |phi_M> = sum_{n=1}^{M} d_n |n>. The generators are
//
//   P_M = B^dag - B
//   Q_M = c_0 (Pi_M - B^dag B) + sqrt(1 - c_0^2) (B + B^dag)
//
// i.e. |e~><o~| - |o~><e~| and |e~><e~| - |o~><o~| for the normalized
// displaced cat states with |-2 alpha> replaced by its cutoff version. The
// unnormalized variants
//
//   P_lit = -2 sqrt(1 - c_0^2) (B - B^dag)
//   Q_lit = 4 c_0 Pi_M + 2 sqrt(1 - c_0^2) (B + B^dag)
//
// are the same expressions for cat states (|0> +- |-2 alpha>) without their
// normalization; they are kept as a diagnostic (their exponentials are not a
// Hadamard gate).
//
// Above the cutoff the normal-ordered series no longer projects (its
// diagonal is (-1)^M C(n-1, M) for n > M), so every synthesized operator is
// restricted to levels 0..M and acts as zero above them.

#include <vector>

#include "quasibell/fock.hpp"

namespace quasibell::fock {

struct SynthesisCoefficients {
  std::vector<double> c;  // c_0 .. c_M
  std::vector<double> d;  // d_1 .. d_M (d[0] is d_1)
  double delta_m;         // 1 - sum_{n=1}^{M} c_n^2 / (1 - c_0^2)
};

/// c_n = exp(-2 alpha^2) (-2 alpha)^n / sqrt(n!), the Fock amplitudes of
/// |-2 alpha>. Requires alpha > 0 and m_cut >= 1.
SynthesisCoefficients synthesis_coefficients(double alpha, int m_cut);

/// Gate error above which the synthesized gate is flagged as not converged.
inline constexpr double kConvergenceThreshold = 0.1;

struct SynthesisResult {
  double alpha;
  int m_cut;
  SynthesisCoefficients coefficients;
  FockOperator p_m;
  FockOperator q_m;
  FockOperator p_literal;
  FockOperator q_literal;
  FockOperator u_approx;  // -i exp[i (pi/2) Q_M] exp[(pi/4) P_M]
  FockOperator u_exact;   // D(-alpha) U_H D(alpha)
  /// max over the displaced cat basis states v of ||(u_approx - u_exact) v||.
  double gate_error;
  /// Same metric for the unnormalized generators.
  double literal_gate_error;
  /// gate_error <= kConvergenceThreshold.
  bool converged;
};

/// Smallest truncation accepted by synthesize_hadamard:
/// 4 max(1, ceil(4 alpha^2)) + 16.
int minimum_synthesis_dim(double alpha);

/// Default space for synthesis: the larger of FockSpace::for_amplitude and
/// minimum_synthesis_dim.
FockSpace synthesis_space(double alpha);

/// Full-space normal-ordered series sum_{l=0}^{m_cut} (-a^dag)^l a^l / l!,
/// built term by term without the cutoff restriction.
FockOperator vacuum_projector_series(const FockSpace& space, int m_cut);

/// The displaced cat basis (|0> +- |-2 alpha>) / sqrt(2 (1 +- kappa)).
EvenOddCoherent displaced_cat_basis(double alpha, const FockSpace& space,
                                    double tail_tol = kDefaultTailTolerance);

/// D(-alpha) U_H D(alpha), with U_H the Hadamard on span{|e>, |o>} and the
/// identity on its orthogonal complement.
FockOperator displaced_hadamard_exact(double alpha, const FockSpace& space,
                                      double tail_tol = kDefaultTailTolerance);

SynthesisResult synthesize_hadamard(double alpha, int m_cut, const FockSpace& space,
                                    double tail_tol = kDefaultTailTolerance);

}  // namespace quasibell::fock
