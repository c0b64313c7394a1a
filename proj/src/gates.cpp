#include "quasibell/gates.hpp"

#include <cmath>
#include <string>

#include "quasibell/errors.hpp"

namespace quasibell {
namespace {

constexpr double kUnitaryTolerance = 1e-12;

void require_unitary(const MatrixXc& m, const char* what) {
  const double err = linalg::unitarity_error(m);
  if (!(err <= kUnitaryTolerance)) {
    throw DomainError(std::string(what) + ": matrix is not unitary (error " +
                      std::to_string(err) + ")");
  }
}

}  // namespace

OneQubitGate::OneQubitGate(Matrix2c entries) : entries_(std::move(entries)) {
  require_unitary(entries_, "OneQubitGate");
}

TwoQubitGate::TwoQubitGate(Matrix4c entries) : entries_(std::move(entries)) {
  require_unitary(entries_, "TwoQubitGate");
}

TwoQubitState TwoQubitGate::apply(const TwoQubitState& state) const {
  return TwoQubitState::normalized(entries_ * state.amplitudes());
}

TwoQubitGate TwoQubitGate::on_control(const OneQubitGate& u) {
  const MatrixXc k = linalg::kron(u.matrix(), Matrix2c::Identity());
  return TwoQubitGate(k);
}

Matrix2c rotation_generator() {
  Matrix2c p;
  p << 0.0, 1.0, -1.0, 0.0;
  return p;
}

Matrix2c phase_generator() {
  Matrix2c q;
  q << 1.0, 0.0, 0.0, -1.0;
  return q;
}

OneQubitGate walsh_hadamard(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix2c u;
  u << c, -s, s, c;
  return OneQubitGate(u);
}

TwoQubitGate controlled_not() {
  Matrix4c cn = Matrix4c::Zero();
  cn(0, 0) = 1.0;  // ee -> ee
  cn(1, 1) = 1.0;  // eo -> eo
  cn(3, 2) = 1.0;  // oe -> oo
  cn(2, 3) = 1.0;  // oo -> oe
  return TwoQubitGate(cn);
}

OneQubitGate hadamard_rotation() {
  using std::numbers::pi;
  const Complex i(0.0, 1.0);
  const MatrixXc phase = linalg::expm(MatrixXc(i * (pi / 2.0) * phase_generator()));
  const MatrixXc rotation = linalg::expm(MatrixXc((pi / 4.0) * rotation_generator()));
  return OneQubitGate(Matrix2c(-i * phase * rotation));
}

GenerationResult generate_quasi_bell(const OverlapPair& pair) {
  const TwoQubitState input(Vector4c(1.0, 0.0, 0.0, 0.0));
  const TwoQubitState superposed = TwoQubitGate::on_control(walsh_hadamard()).apply(input);
  const TwoQubitState out = controlled_not().apply(superposed);
  const TwoQubitState psi3 = quasi_bell_state(pair, QuasiBellIndex(3));
  return {out, std::abs(psi3.overlap(out))};
}

}  // namespace quasibell
