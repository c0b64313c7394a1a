#pragma once

// Gates on the even/odd qubit encoding. Two-qubit gates act on
// {|ee>, |eo>, |oe>, |oo>} with the control mode first.

#include <numbers>

#include <Eigen/Dense>

#include "quasibell/twostate.hpp"

namespace quasibell {

using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;

class OneQubitGate {
 public:
  /// Throws DomainError unless U^dag U = I to 1e-12.
  explicit OneQubitGate(Matrix2c entries);

  const Matrix2c& matrix() const { return entries_; }
  Vector2c apply(const Vector2c& v) const { return entries_ * v; }

  friend OneQubitGate operator*(const OneQubitGate& lhs, const OneQubitGate& rhs) {
    return OneQubitGate(lhs.entries_ * rhs.entries_);
  }

 private:
  Matrix2c entries_;
};

class TwoQubitGate {
 public:
  explicit TwoQubitGate(Matrix4c entries);

  const Matrix4c& matrix() const { return entries_; }
  TwoQubitState apply(const TwoQubitState& state) const;

  /// U (x) I: the gate on the control mode, target untouched.
  static TwoQubitGate on_control(const OneQubitGate& u);

 private:
  Matrix4c entries_;
};

/// |e><o| - |o><e|.
Matrix2c rotation_generator();
/// |e><e| - |o><o|.
Matrix2c phase_generator();

/// exp{theta (|o><e| - |e><o|)} = [[cos, -sin], [sin, cos]].
///
/// The generator is oriented so that walsh_hadamard(pi/4)|e> = (|e> + |o>)/sqrt(2),
/// the superposition the generation pipeline needs. With the opposite
/// orientation, exp(theta * rotation_generator()) = walsh_hadamard(-theta).
OneQubitGate walsh_hadamard(double theta = std::numbers::pi / 4.0);

/// |e><e| (x) I + |o><o| (x) (|e><o| + |o><e|).
TwoQubitGate controlled_not();

/// -i exp[i (pi/2) Q] exp[(pi/4) P] with P = rotation_generator() and
/// Q = phase_generator(); equals (1/sqrt 2)[[1, 1], [1, -1]].
OneQubitGate hadamard_rotation();

struct GenerationResult {
  TwoQubitState state;
  /// |<Psi_3|out>|, which is 1/sqrt(1 + kappa^2) rather than 1: the pipeline
  /// output is (|ee> + |oo>)/sqrt(2) in the orthonormal basis.
  double fidelity_to_psi3;
};

/// Walsh-Hadamard on a control in |e>, then CNOT onto a target in |e>.
GenerationResult generate_quasi_bell(const OverlapPair& pair);

}  // namespace quasibell
