#include "quasibell/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "quasibell/errors.hpp"

namespace quasibell::linalg {
namespace {

double one_norm(const MatrixXc& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Returns U (odd part) and V (even part) of the [k/k] Pade approximant, so
// that exp(A) ~ (V - U)^{-1} (V + U).
template <std::size_t N>
void pade_low(const MatrixXc& a, const std::array<double, N>& b, MatrixXc& u,
              MatrixXc& v) {
  const auto n = a.rows();
  const MatrixXc ident = MatrixXc::Identity(n, n);
  const MatrixXc a2 = a * a;
  MatrixXc power = ident;
  MatrixXc odd = b[1] * ident;
  v = b[0] * ident;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    v += b[k] * power;
    if (k + 1 < N) odd += b[k + 1] * power;
  }
  u = a * odd;
}

void pade13(const MatrixXc& a, MatrixXc& u, MatrixXc& v) {
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const auto n = a.rows();
  const MatrixXc ident = MatrixXc::Identity(n, n);
  const MatrixXc a2 = a * a;
  const MatrixXc a4 = a2 * a2;
  const MatrixXc a6 = a4 * a2;
  const MatrixXc inner_u = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  const MatrixXc inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * inner_v + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

}  // namespace

MatrixXc expm(const MatrixXc& a) {
  if (a.rows() != a.cols()) throw DomainError("expm: matrix must be square");
  if (a.size() == 0) return a;

  static constexpr std::array<double, 4> b3 = {120.0, 60.0, 12.0, 1.0};
  static constexpr std::array<double, 6> b5 = {30240.0, 15120.0, 3360.0,
                                               420.0,   30.0,    1.0};
  static constexpr std::array<double, 8> b7 = {17297280.0, 8648640.0, 1995840.0,
                                               277200.0,   25200.0,   1512.0,
                                               56.0,       1.0};
  static constexpr std::array<double, 10> b9 = {
      17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
      2162160.0,     110880.0,     3960.0,       90.0,        1.0};
  // Backward-error bounds theta_m for double precision.
  constexpr double theta3 = 1.495585217958292e-2;
  constexpr double theta5 = 2.539398330063230e-1;
  constexpr double theta7 = 9.504178996162932e-1;
  constexpr double theta9 = 2.097847961257068e0;
  constexpr double theta13 = 5.371920351148152e0;

  const double norm = one_norm(a);
  if (!std::isfinite(norm)) throw DomainError("expm: non-finite matrix entries");

  MatrixXc u;
  MatrixXc v;
  int squarings = 0;
  if (norm <= theta3) {
    pade_low(a, b3, u, v);
  } else if (norm <= theta5) {
    pade_low(a, b5, u, v);
  } else if (norm <= theta7) {
    pade_low(a, b7, u, v);
  } else if (norm <= theta9) {
    pade_low(a, b9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    pade13(a / std::ldexp(1.0, squarings), u, v);
  }

  MatrixXc result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

std::vector<double> hermitian_eigenvalues(const MatrixXc& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double entropy_bits(std::span<const double> probabilities, double clamp_tol) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p < -clamp_tol) {
      throw DomainError("entropy_bits: negative probability " + std::to_string(p));
    }
    if (p <= 0.0) continue;
    h -= p * std::log2(p);
  }
  return h;
}

double hermiticity_error(const MatrixXc& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const MatrixXc& m) {
  const auto n = m.rows();
  return (m.adjoint() * m - MatrixXc::Identity(n, n)).cwiseAbs().maxCoeff();
}

Complex inner(const VectorXc& u, const VectorXc& v) { return u.dot(v); }

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace quasibell::linalg
