#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "quasibell/errors.hpp"
#include "quasibell/synthesis.hpp"

using namespace quasibell;
using namespace quasibell::fock;

namespace {

// tests/oracles/series_oracle.py, alpha = 0.5.
struct DeltaRef {
  int m;
  double delta;
};
const DeltaRef kDelta[] = {
    {1, 0.4180232931306735756},   {2, 0.1270349396960103634},
    {4, 0.005789792431567358342}, {6, 0.0001316855592266847719},
    {8, 1.780044300495837864e-6}, {10, 1.589533236240789589e-8},
    {12, 1.006101959240187671e-10},
};

// tests/oracles/synthesis_oracle.py, alpha = 0.5.
struct GateRef {
  int m;
  double error;
};
const GateRef kGate[] = {
    {1, 0.843783955865142},      {2, 0.46490546236160757},   {4, 0.09923407468170116},
    {6, 0.014965636225031905},   {8, 0.0017399687164379918}, {10, 0.00016442234588241408},
    {12, 1.308118329029761e-05},
};

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

double max_abs(const MatrixXc& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(SynthesisCoefficients, CutoffErrorMatchesReference) {
  for (const auto& ref : kDelta) {
    const double got = synthesis_coefficients(0.5, ref.m).delta_m;
    EXPECT_NEAR(got / ref.delta, 1.0, 1e-12) << ref.m;
  }
}

TEST(SynthesisCoefficients, AmplitudesOfFarCoherentState) {
  const double alpha = 0.7;
  const int m = 9;
  const auto co = synthesis_coefficients(alpha, m);
  ASSERT_EQ(co.c.size(), 10u);
  ASSERT_EQ(co.d.size(), 9u);
  const FockSpace space = FockSpace::for_amplitude(alpha);
  const VectorXc far = coherent_state(-2.0 * alpha, space).amplitudes();
  for (int n = 0; n <= m; ++n) EXPECT_NEAR(co.c[n], far(n).real(), 1e-13) << n;
  double sum_d = 0.0;
  for (double x : co.d) sum_d += x * x;
  EXPECT_NEAR(sum_d, 1.0, 1e-14);
}

TEST(SynthesisCoefficients, FullWeightForLargeCutoff) {
  const auto co = synthesis_coefficients(0.5, 40);
  double sum_c = 0.0;
  for (double x : co.c) sum_c += x * x;
  EXPECT_NEAR(sum_c, 1.0, 1e-14);
  EXPECT_LT(co.delta_m, 1e-30);
}

TEST(SynthesisCoefficients, CutoffErrorNonIncreasing) {
  for (double alpha : {0.3, 0.5, 1.0, 2.0}) {
    double prev = 1.0;
    for (int m = 1; m <= 30; ++m) {
      const double d = synthesis_coefficients(alpha, m).delta_m;
      EXPECT_LE(d, prev) << alpha << " " << m;
      EXPECT_GE(d, 0.0);
      prev = d;
    }
  }
}

TEST(SynthesisCoefficients, Errors) {
  EXPECT_THROW(synthesis_coefficients(0.0, 3), DomainError);
  EXPECT_THROW(synthesis_coefficients(-0.5, 3), DomainError);
  EXPECT_THROW(synthesis_coefficients(0.5, 0), DomainError);
  EXPECT_THROW(synthesis_coefficients(std::nan(""), 3), DomainError);
}

TEST(VacuumProjectorSeries, VacuumBelowCutoffBinomialAbove) {
  const FockSpace space(14);
  for (int m : {1, 2, 5, 8}) {
    const MatrixXc pi = vacuum_projector_series(space, m).matrix();
    for (int r = 0; r < space.dim(); ++r) {
      for (int c = 0; c < space.dim(); ++c) {
        double expected = 0.0;
        if (r == c) {
          if (r == 0) expected = 1.0;
          else if (r > m) expected = ((m % 2 == 0) ? 1.0 : -1.0) * binomial(r - 1, m);
        }
        EXPECT_NEAR(std::abs(pi(r, c) - expected), 0.0, 1e-9 * std::max(1.0, std::abs(expected)))
            << m << " " << r << " " << c;
      }
    }
  }
}

TEST(SynthesizeHadamard, GeneratorSymmetry) {
  const auto r = synthesize_hadamard(0.5, 8, synthesis_space(0.5));
  const MatrixXc& p = r.p_m.matrix();
  const MatrixXc& q = r.q_m.matrix();
  EXPECT_LT(max_abs(p + p.adjoint()), 1e-10);
  EXPECT_LT(max_abs(q - q.adjoint()), 1e-10);
  const MatrixXc& u = r.u_approx.matrix();
  EXPECT_LT(max_abs(u * u.adjoint() - MatrixXc::Identity(u.rows(), u.cols())), 1e-10);
}

TEST(SynthesizeHadamard, LiteralGeneratorsAreRescaledCopies) {
  const auto r = synthesize_hadamard(0.5, 6, synthesis_space(0.5));
  const double s = std::sqrt(1.0 - r.coefficients.c[0] * r.coefficients.c[0]);
  EXPECT_LT(max_abs(r.p_literal.matrix() - 2.0 * s * r.p_m.matrix()), 1e-12);
  const MatrixXc& q = r.q_literal.matrix();
  EXPECT_LT(max_abs(q - q.adjoint()), 1e-10);
}

TEST(SynthesizeHadamard, GateErrorMatchesReference) {
  const FockSpace space = synthesis_space(0.5);
  for (const auto& ref : kGate) {
    const auto r = synthesize_hadamard(0.5, ref.m, space);
    EXPECT_NEAR(r.gate_error, ref.error, std::max(1e-7 * ref.error, 1e-10)) << ref.m;
    EXPECT_GT(r.literal_gate_error, 1.0) << ref.m;
  }
}

TEST(SynthesizeHadamard, ConvergesWithCutoff) {
  const FockSpace space = synthesis_space(0.5);
  double prev = 2.0;
  for (int m : {2, 4, 6, 8, 10}) {
    const auto r = synthesize_hadamard(0.5, m, space);
    EXPECT_LT(r.gate_error, prev) << m;
    prev = r.gate_error;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(SynthesizeHadamard, ErrorBoundedByCutoffError) {
  for (double alpha : {0.3, 0.5, 1.0}) {
    const FockSpace space = synthesis_space(alpha);
    for (int m : {1, 2, 4, 6, 8, 10, 12}) {
      const auto r = synthesize_hadamard(alpha, m, space);
      EXPECT_LE(r.gate_error, 10.0 * std::sqrt(r.coefficients.delta_m) + 1e-6)
          << alpha << " " << m;
    }
  }
}

TEST(SynthesizeHadamard, ConvergedFlag) {
  const FockSpace space = synthesis_space(0.5);
  EXPECT_FALSE(synthesize_hadamard(0.5, 2, space).converged);
  EXPECT_TRUE(synthesize_hadamard(0.5, 6, space).converged);
}

TEST(SynthesizeHadamard, ExactTargetActsAsHadamardOnCats) {
  const double alpha = 0.8;
  const FockSpace space = synthesis_space(alpha);
  const MatrixXc u = displaced_hadamard_exact(alpha, space).matrix();
  EXPECT_LT(max_abs(u * u.adjoint() - MatrixXc::Identity(space.dim(), space.dim())), 1e-10);
  const auto cat = displaced_cat_basis(alpha, space);
  const VectorXc& e = cat.even.amplitudes();
  const VectorXc& o = cat.odd.amplitudes();
  EXPECT_LT((u * e - (e + o) / std::sqrt(2.0)).norm(), 1e-10);
  EXPECT_LT((u * o - (e - o) / std::sqrt(2.0)).norm(), 1e-10);
}

TEST(SynthesizeHadamard, Errors) {
  EXPECT_THROW(synthesize_hadamard(0.5, 4, FockSpace(10)), TruncationError);
  EXPECT_THROW(synthesize_hadamard(0.0, 4, synthesis_space(0.5)), DomainError);
  EXPECT_THROW(synthesize_hadamard(0.5, 0, synthesis_space(0.5)), DomainError);
  EXPECT_EQ(minimum_synthesis_dim(0.5), 20);
  EXPECT_GE(synthesis_space(3.0).dim(), FockSpace::for_amplitude(3.0).dim());
}
