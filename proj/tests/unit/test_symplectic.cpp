#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "critmech/errors.hpp"
#include "critmech/oracle/dicke.hpp"
#include "critmech/oracle/eigensolve.hpp"
#include "critmech/oracle/symplectic.hpp"
#include "dynamical_matrix.hpp"
#include "reference_values.hpp"

using namespace critmech;
using namespace critmech::oracle;

TEST(Symplectic, ReferencePoint) {
  for (auto precision : {Precision::Double, Precision::Extended}) {
    const auto modes = superradiant_frame_modes(1.0, 4.0, 0.64, precision);
    ASSERT_TRUE(modes.stable);
    EXPECT_FALSE(modes.zero_mode.has_value());
    EXPECT_NEAR(modes.frequencies[0], ref::kOmegaMinus, 1e-13);
    EXPECT_NEAR(modes.frequencies[1], ref::kOmegaPlus, 1e-13);
    EXPECT_LT(modes.symplectic_error, 1e-13);
    const auto g = extract_polariton_couplings(modes, 1.0);
    EXPECT_NEAR(g.g_minus, ref::kGMinus, 1e-13);
    EXPECT_NEAR(g.g_plus, ref::kGPlus, 1e-14);
  }
}

TEST(Symplectic, ExtendedPrecisionResolvesHeadlinePoint) {
  const double offset = offset_for_omega_minus(1.0, 10.0, 1e-6);
  const auto modes = superradiant_frame_modes_at_offset(1.0, 10.0, offset, Precision::Extended);
  ASSERT_TRUE(modes.stable);
  EXPECT_NEAR(modes.frequencies[0] / 1e-6, 1.0, 1e-12);
  const auto g = extract_polariton_couplings(modes, 1.0);
  EXPECT_NEAR(g.g_minus / ref::kHeadlineGMinus, 1.0, 1e-12);

  // Double precision cannot separate a 1e-14 squared-frequency ratio.
  const auto coarse = superradiant_frame_modes_at_offset(1.0, 10.0, offset, Precision::Double);
  EXPECT_GT(std::abs(coarse.frequencies[0] / 1e-6 - 1.0), 1e-6);
}

TEST(Symplectic, CriticalPointHasZeroMode) {
  const auto modes = superradiant_frame_modes(1.0, 4.0, 1.0, Precision::Extended);
  ASSERT_TRUE(modes.zero_mode.has_value());
  EXPECT_EQ(*modes.zero_mode, 0u);
  EXPECT_EQ(modes.frequencies[0], 0.0);
  EXPECT_THROW(extract_polariton_couplings(modes, 1.0), CriticalDivergenceError);
  EXPECT_THROW(superradiant_frame_modes(1.0, 4.0, 1.2), PhaseError);
}

TEST(Symplectic, UnstableForm) {
  QuadraticForm f;
  f.mode_frequencies = {1.0, 1.0};
  f.xx_couplings = Eigen::MatrixXd::Zero(2, 2);
  f.xx_couplings(0, 1) = 0.8;  // above the sqrt(w1 w2)/2 stability bound
  f.squeeze_terms = {0.0, 0.0};
  const auto modes = symplectic_diagonalize(f);
  EXPECT_FALSE(modes.stable);
  EXPECT_TRUE(std::isnan(modes.frequencies[0]));
  EXPECT_THROW(extract_polariton_couplings(modes, 1.0), ContractError);
}

TEST(SymplecticProperty, MatchesEquationsOfMotionOnRandomForms) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> w(0.5, 5.0), c(-0.15, 0.15), s(0.0, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    QuadraticForm f;
    f.mode_frequencies = {w(rng), w(rng), w(rng)};
    f.xx_couplings = Eigen::MatrixXd::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) f.xx_couplings(i, j) = c(rng);
    f.squeeze_terms = {s(rng), s(rng), s(rng)};
    const auto modes = symplectic_diagonalize(f);
    ASSERT_TRUE(modes.stable);
    const auto ref_freqs = testsupport::dynamical_frequencies(f.mode_frequencies, f.xx_couplings, f.squeeze_terms);
    for (int k = 0; k < 3; ++k)
      EXPECT_NEAR(modes.frequencies[static_cast<std::size_t>(k)], ref_freqs[static_cast<std::size_t>(k)], 1e-10)
          << "trial " << trial;
    EXPECT_LT(modes.symplectic_error, 1e-12);
  }
}

TEST(SymplecticProperty, AnalyticCouplingsOnSuperradiantBranch) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> wm(0.5, 2.0), ratio(1.0, 10.0), mu(0.05, 0.999);
  for (int trial = 0; trial < 100; ++trial) {
    const double m = wm(rng);
    const double q = m * ratio(rng);
    const double u = mu(rng);
    const auto analytic = optomech_couplings(1.0, m, polariton_frequencies(m, q, u));
    const auto g = extract_polariton_couplings(superradiant_frame_modes(m, q, u), 1.0);
    EXPECT_NEAR(g.g_minus / analytic.g_minus, 1.0, 1e-10) << "trial " << trial;
    EXPECT_NEAR(g.g_plus / analytic.g_plus, 1.0, 1e-10) << "trial " << trial;
  }
}

// Brute force: diagonalize the truncated-Fock quadratic Hamiltonian and read
// <1_k| (b + b^dag) |0> directly. This fixes the normalization of the mode
// expansion without reference to the symplectic solver.
TEST(Symplectic, FockMatrixElementsMatchPositionMap) {
  const auto model = closed_form_coefficients(1.0, 4.0, 1.25, 0.64);
  const auto space = build_space({30, 30});
  const auto h = quadratic_hamiltonian(space, model);
  EigensolveOptions opts;
  opts.check_residuals = false;
  const auto spec = hermitian_eigensolve(h, opts);
  const auto b = space.annihilation(0);
  const Eigen::MatrixXcd xb = (b + b.adjoint()).entries();
  const Eigen::VectorXcd ground = spec.eigenvectors.col(0);

  const auto modes = superradiant_frame_modes(1.0, 4.0, 0.64);
  for (std::size_t k = 0; k < 2; ++k) {
    const double target = spec.eigenvalues(0) + modes.frequencies[k];
    Eigen::Index best = 1;
    for (Eigen::Index i = 1; i < spec.eigenvalues.size(); ++i)
      if (std::abs(spec.eigenvalues(i) - target) < std::abs(spec.eigenvalues(best) - target)) best = i;
    EXPECT_NEAR(spec.eigenvalues(best), target, 1e-7);
    const double element = std::abs(spec.eigenvectors.col(best).dot(xb * ground));
    EXPECT_NEAR(element, std::abs(modes.position_map(0, static_cast<Eigen::Index>(k))), 1e-6) << "mode " << k;
  }
}
