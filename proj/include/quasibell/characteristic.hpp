#pragma once

// Two-mode characteristic function
//   C(xi, eta) = Tr[rho e^{xi a^dag} e^{-xi* a} e^{eta b^dag} e^{-eta* b}] e^{-(|xi|^2 + |eta|^2)/2},
// i.e. the expectation of the displacement D_A(xi) D_B(eta).

#include "quasibell/fock.hpp"

namespace quasibell::fock {

inline constexpr double kCharacteristicTailTolerance = 1e-9;

/// Dense evaluation on the truncated space. Throws TruncationError if the
/// coherent tail of |xi| or |eta| above the cutoff reaches tail_tol.
Complex characteristic_function_numeric(const TwoModeState& state, Complex xi, Complex eta,
                                        double tail_tol = kCharacteristicTailTolerance);

/// Four-term closed form for the coherent quasi-Bell states. With
/// A1 = xi - xi*, A2 = xi + xi*, B1 = eta - eta*, B2 = eta + eta* and
/// s = +1 (families 1, 2) or -1 (families 3, 4):
///
///   h^2 e^{-(|xi|^2+|eta|^2)/2} { e^{alpha(A1 - s B1)} + e^{-alpha(A1 - s B1)}
///                               +- kappa^2 [e^{alpha(A2 - s B2)} + e^{-alpha(A2 - s B2)}] }
///
/// The kappa^2 weight on the interference terms is the product of the two
/// single-mode overlaps <alpha|D|-alpha> and is what makes C(0, 0) = 1.
Complex characteristic_function_closed(QuasiBellIndex index, double alpha, Complex xi,
                                       Complex eta);

/// Characteristic function of the Gaussian state with the same first and
/// second moments as `state`: exp(<L> + (<L^2> - <L>^2)/2) with
/// L = xi a^dag - xi* a + eta b^dag - eta* b.
Complex gaussian_characteristic(const TwoModeState& state, Complex xi, Complex eta);

}  // namespace quasibell::fock
