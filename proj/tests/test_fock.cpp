#include <gtest/gtest.h>

#include <cmath>

#include "quasibell/errors.hpp"
#include "quasibell/fock.hpp"

using namespace quasibell;
using namespace quasibell::fock;

namespace {

// Mean photon numbers at alpha = 1 (kappa = e^-2), mpmath at 40 digits.
constexpr double kPhotonSymmetricAlpha1 = 0.964027580075816883946413724100923150255;
constexpr double kPhotonAntisymmetricAlpha1 = 1.037314720727548095877809764767820711662;
// sqrt(ln 2 / 2): kappa = 1/2.
constexpr double kAlphaKappaHalf = 0.5887050112577373455057846632298498188737;

TwoModeState product_state(const FockVector& a, const FockVector& b) {
  return TwoModeState(a.amplitudes() * b.amplitudes().transpose(), a.space());
}

}  // namespace

// ---------- FockSpace / operators ----------

TEST(FockSpace, ValidationAndPolicy) {
  EXPECT_THROW(FockSpace(1), DomainError);
  EXPECT_EQ(FockSpace::for_amplitude(0.5).dim(), 29);
  EXPECT_EQ(FockSpace::for_amplitude(1.0).dim(), 40);
  EXPECT_EQ(FockSpace::for_amplitude(3.0).dim(), 104);
}

TEST(FockOperators, TruncatedCommutator) {
  const FockSpace space(12);
  const MatrixXc a = annihilation(space).matrix();
  const MatrixXc ad = creation(space).matrix();
  const MatrixXc comm = a * ad - ad * a;
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) EXPECT_NEAR(std::abs(comm(i, j) - (i == j ? 1.0 : 0.0)), 0.0, 1e-14);
  }
  EXPECT_LT((ad * a - number_operator(space).matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

// ---------- coherent_state ----------

TEST(CoherentState, VacuumAtZero) {
  const auto v = coherent_state(0.0, FockSpace(8));
  EXPECT_EQ(v[0], Complex(1.0));
  for (int n = 1; n < 8; ++n) EXPECT_EQ(v[n], Complex(0.0));
}

TEST(CoherentState, MeanPhotonNumber) {
  const auto v = coherent_state(1.0, FockSpace(32));
  double mean = 0.0;
  for (int n = 0; n < 32; ++n) mean += n * std::norm(v[n]);
  EXPECT_NEAR(mean, 1.0, 1e-10);
  EXPECT_NEAR(v.mean_photon_number(), 1.0, 1e-10);
}

TEST(CoherentState, OverlapOfOppositeAmplitudes) {
  const FockSpace space(32);
  const Complex k = coherent_state(1.0, space).overlap(coherent_state(-1.0, space));
  EXPECT_NEAR(k.real(), std::exp(-2.0), 1e-14);
  EXPECT_NEAR(k.real(), overlap_kappa(1.0), 1e-14);
}

TEST(CoherentState, TailMassAgainstDirectSum) {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (int n_max : {2, 5, 10}) {
      const double mean = alpha * alpha;
      double head = 0.0;
      double term = std::exp(-mean);
      for (int n = 0; n < n_max; ++n) {
        head += term;
        term *= mean / (n + 1);
      }
      EXPECT_NEAR(coherent_tail_mass(alpha, n_max), 1.0 - head, 1e-14) << alpha << " " << n_max;
    }
  }
  EXPECT_EQ(coherent_tail_mass(0.0, 3), 0.0);
}

TEST(CoherentState, TruncationErrorWhenSpaceTooSmall) {
  EXPECT_THROW(coherent_state(3.0, FockSpace(10)), TruncationError);
  EXPECT_NO_THROW(coherent_state(3.0, FockSpace::for_amplitude(3.0)));
}

// ---------- displacement_operator ----------

TEST(Displacement, ZeroIsIdentity) {
  const FockSpace space(10);
  EXPECT_LT((displacement_operator(0.0, space).matrix() - MatrixXc::Identity(10, 10)).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(Displacement, InversePairAndCoherentImage) {
  const double alpha = 0.7;
  const FockSpace space = FockSpace::for_amplitude(alpha);
  const auto d = displacement_operator(alpha, space);
  const auto dm = displacement_operator(-alpha, space);
  const VectorXc vac = coherent_state(0.0, space).amplitudes();
  EXPECT_LT(((dm * d).apply(vac) - vac).norm(), 1e-9);
  EXPECT_LT((d.apply(vac) - coherent_state(alpha, space).amplitudes()).norm(), 1e-9);
  EXPECT_LT(linalg::unitarity_error(d.matrix()), 1e-12);
}

TEST(Displacement, ShiftsCoherentStates) {
  const double alpha = 0.5;
  const FockSpace space = FockSpace::for_amplitude(alpha);
  const VectorXc shifted =
      displacement_operator(-alpha, space).apply(coherent_state(-alpha, space).amplitudes());
  EXPECT_LT((shifted - coherent_state(-1.0, space).amplitudes()).norm(), 1e-9);
}

TEST(Displacement, TruncationError) {
  EXPECT_THROW(displacement_operator(4.0, FockSpace(12)), TruncationError);
}

// ---------- quasi_bell_coherent ----------

TEST(QuasiBellCoherent, ZeroAmplitude) {
  const FockSpace space(6);
  const auto s = quasi_bell_coherent(QuasiBellIndex(3), 0.0, space);
  EXPECT_NEAR(std::abs(s.coefficients()(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(s.coefficients().norm(), 1.0, 1e-15);
  EXPECT_THROW(quasi_bell_coherent(QuasiBellIndex(2), 0.0, space), DegenerateState);
  EXPECT_THROW(quasi_bell_coherent(QuasiBellIndex(4), 0.0, space), DegenerateState);
  EXPECT_THROW(quasi_bell_coherent(QuasiBellIndex(1), -0.5, space), DomainError);
}

TEST(QuasiBellCoherent, AntisymmetricIsOneEbit) {
  const auto s = quasi_bell_coherent(QuasiBellIndex(2), 1.0, FockSpace::for_amplitude(1.0));
  EXPECT_NEAR(partial_trace(s, Subsystem::A).entropy(), 1.0, 1e-9);
}

TEST(QuasiBellCoherent, GramMatchesClosedForm) {
  for (double alpha : {0.3, 0.5, 1.0, 2.0}) {
    const FockSpace space = FockSpace::for_amplitude(alpha);
    const Eigen::Matrix4d closed = gram_matrix(OverlapPair(overlap_kappa(alpha)));
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        const Complex g = quasi_bell_coherent(QuasiBellIndex(i), alpha, space)
                              .overlap(quasi_bell_coherent(QuasiBellIndex(j), alpha, space));
        EXPECT_NEAR(std::abs(g - closed(i - 1, j - 1)), 0.0, 1e-9) << alpha << " " << i << j;
      }
    }
  }
}

TEST(QuasiBellCoherent, Psi1Psi3OverlapAtAlpha1) {
  const FockSpace space = FockSpace::for_amplitude(1.0);
  const double k = std::exp(-2.0);
  const Complex g = quasi_bell_coherent(QuasiBellIndex(1), 1.0, space)
                        .overlap(quasi_bell_coherent(QuasiBellIndex(3), 1.0, space));
  EXPECT_NEAR(g.real(), 2 * k / (1 + k * k), 1e-12);
}

// ---------- partial_trace ----------

TEST(PartialTrace, ProductStateIsPure) {
  const FockSpace space = FockSpace::for_amplitude(1.0);
  const auto v = coherent_state(1.0, space);
  const auto rho = partial_trace(product_state(v, v), Subsystem::A);
  EXPECT_NEAR(rho.entropy(), 0.0, 1e-10);
  EXPECT_NEAR(rho.eigenvalues()[0], 1.0, 1e-12);
}

TEST(PartialTrace, KappaHalfEigenvalues) {
  EXPECT_NEAR(overlap_kappa(kAlphaKappaHalf), 0.5, 1e-15);
  const FockSpace space = FockSpace::for_amplitude(kAlphaKappaHalf);
  const auto ev = partial_trace(quasi_bell_coherent(QuasiBellIndex(1), kAlphaKappaHalf, space),
                                Subsystem::A)
                      .eigenvalues();
  EXPECT_NEAR(ev[0], 0.9, 1e-8);
  EXPECT_NEAR(ev[1], 0.1, 1e-8);
  for (std::size_t i = 2; i < ev.size(); ++i) EXPECT_NEAR(ev[i], 0.0, 1e-12);
}

TEST(PartialTrace, AntisymmetricHalfHalf) {
  for (double alpha : {0.25, 0.8, 1.5}) {
    const FockSpace space = FockSpace::for_amplitude(alpha);
    const auto ev = partial_trace(quasi_bell_coherent(QuasiBellIndex(2), alpha, space), Subsystem::B)
                        .eigenvalues();
    EXPECT_NEAR(ev[0], 0.5, 1e-9);
    EXPECT_NEAR(ev[1], 0.5, 1e-9);
    for (std::size_t i = 2; i < ev.size(); ++i) EXPECT_NEAR(ev[i], 0.0, 1e-9);
  }
}

TEST(PartialTrace, BothSidesShareSpectrum) {
  const FockSpace space = FockSpace::for_amplitude(0.9);
  for (int i = 1; i <= 4; ++i) {
    const auto s = quasi_bell_coherent(QuasiBellIndex(i), 0.9, space);
    const auto a = partial_trace(s, Subsystem::A).eigenvalues();
    const auto b = partial_trace(s, Subsystem::B).eigenvalues();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(a[k], b[k], 1e-12);
  }
}

TEST(PartialTrace, AgreesWithAbstractLayer) {
  for (double alpha : {0.3, 0.58871, 1.0, 2.0}) {
    const FockSpace space = FockSpace::for_amplitude(alpha);
    const OverlapPair pair(overlap_kappa(alpha));
    for (int i = 1; i <= 4; ++i) {
      const double fock_entropy =
          partial_trace(quasi_bell_coherent(QuasiBellIndex(i), alpha, space), Subsystem::A).entropy();
      EXPECT_NEAR(fock_entropy, entropy_of_entanglement(quasi_bell_state(pair, QuasiBellIndex(i))), 1e-8)
          << alpha << " " << i;
    }
  }
}

// ---------- mean_photon_number ----------

TEST(MeanPhotonNumber, AlphaOne) {
  const FockSpace space = FockSpace::for_amplitude(1.0);
  for (int i : {1, 3}) {
    EXPECT_NEAR(mean_photon_number_closed(QuasiBellIndex(i), 1.0), kPhotonSymmetricAlpha1, 1e-14);
    EXPECT_NEAR(mean_photon_number(QuasiBellIndex(i), 1.0, space), kPhotonSymmetricAlpha1, 1e-8);
  }
  for (int i : {2, 4}) {
    EXPECT_NEAR(mean_photon_number_closed(QuasiBellIndex(i), 1.0), kPhotonAntisymmetricAlpha1, 1e-14);
    EXPECT_NEAR(mean_photon_number(QuasiBellIndex(i), 1.0, space), kPhotonAntisymmetricAlpha1, 1e-8);
  }
}

TEST(MeanPhotonNumber, LargeAmplitudeLimit) {
  const FockSpace space = FockSpace::for_amplitude(3.0);
  EXPECT_NEAR(mean_photon_number(QuasiBellIndex(1), 3.0, space), 9.0, 1e-6);
  EXPECT_NEAR(mean_photon_number(QuasiBellIndex(2), 3.0, space), 9.0, 1e-6);
}

TEST(MeanPhotonNumber, DegenerateAtZero) {
  EXPECT_THROW(mean_photon_number_closed(QuasiBellIndex(2), 0.0), DegenerateState);
  EXPECT_THROW(mean_photon_number(QuasiBellIndex(4), 0.0, FockSpace(4)), DegenerateState);
  EXPECT_EQ(mean_photon_number(QuasiBellIndex(1), 0.0, FockSpace(4)), 0.0);
}

// ---------- even_odd_coherent ----------

TEST(EvenOddCoherent, ParityAndOrthogonality) {
  const FockSpace space = FockSpace::for_amplitude(1.0);
  const auto cat = even_odd_coherent(1.0, space);
  for (int n = 0; n < space.dim(); ++n) {
    const Complex wrong_parity = (n % 2 == 1) ? cat.even[n] : cat.odd[n];
    EXPECT_LT(std::abs(wrong_parity), 1e-12) << n;
  }
  EXPECT_LT(std::abs(cat.even.overlap(cat.odd)), 1e-12);
}

TEST(EvenOddCoherent, EvenMeanPhotonNumber) {
  for (double alpha : {0.4, 1.0, 1.7}) {
    const auto cat = even_odd_coherent(alpha, FockSpace::for_amplitude(alpha));
    const double k = overlap_kappa(alpha);
    EXPECT_NEAR(cat.even.mean_photon_number(), alpha * alpha * (1 - k) / (1 + k), 1e-10);
    EXPECT_NEAR(cat.even.mean_photon_number(), alpha * alpha * std::tanh(alpha * alpha), 1e-10);
    EXPECT_NEAR(cat.odd.mean_photon_number(), alpha * alpha * (1 + k) / (1 - k), 1e-10);
  }
}

TEST(EvenOddCoherent, RejectsZeroAmplitude) {
  EXPECT_THROW(even_odd_coherent(0.0, FockSpace(4)), DegenerateState);
}
