#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "critmech/criticality.hpp"
#include "critmech/errors.hpp"
#include "dynamical_matrix.hpp"
#include "reference_values.hpp"

using namespace critmech;

namespace {

SystemParams params_for(double omega_m, double omega_q, double G, std::uint64_t n) {
  SystemParams p;
  p.omega_m = omega_m;
  p.omega_q = omega_q;
  p.g_collective = G;
  p.n_spins = n;
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

struct RandomPoint {
  double omega_m, omega_q, mu;
  std::uint64_t n;
};

RandomPoint draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> wm(0.3, 3.0), ratio(0.5, 12.0), mu(0.02, 1.0);
  std::uniform_int_distribution<std::uint64_t> n(2, 100000);
  const double m = wm(rng);
  return {m, m * ratio(rng), mu(rng), n(rng)};
}

}  // namespace

TEST(CriticalCoupling, ClosedForm) {
  EXPECT_DOUBLE_EQ(critical_coupling(1.0, 4.0), 1.0);
  EXPECT_DOUBLE_EQ(critical_coupling(1.0, 1.0), 0.5);
  EXPECT_NEAR(critical_coupling(1.0, 10.0), ref::kGcRatio10, 1e-15);
  EXPECT_THROW(critical_coupling(0.0, 1.0), DomainError);
  EXPECT_THROW(critical_coupling(1.0, -1.0), DomainError);
}

TEST(CriticalParameter, RangeAndPhase) {
  EXPECT_DOUBLE_EQ(critical_parameter(1.25, 1.0), 0.64);
  EXPECT_DOUBLE_EQ(critical_parameter(1.0, 1.0), 1.0);
  EXPECT_THROW(critical_parameter(0.9, 1.0), PhaseError);
  EXPECT_EQ(classify_phase(0.9, 1.0), Phase::Normal);
  EXPECT_EQ(classify_phase(1.0 + 1e-14, 1.0), Phase::Critical);
  EXPECT_EQ(classify_phase(1.1, 1.0), Phase::Superradiant);
  EXPECT_EQ(to_string(Phase::Superradiant), "superradiant");
}

TEST(SystemParams, CollectiveCouplingAndValidation) {
  SystemParams p;
  p.g_single = 0.5;
  p.n_spins = 16;
  EXPECT_DOUBLE_EQ(p.collective_coupling(), 2.0);
  p.g_collective = 2.0;
  EXPECT_NO_THROW(p.validate());
  p.g_collective = 2.1;
  EXPECT_THROW(p.validate(), ConfigurationError);

  SystemParams missing;
  EXPECT_THROW(missing.validate(), ConfigurationError);
  SystemParams bad = params_for(-1.0, 1.0, 1.0, 4);
  EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Displacements, ReferencePoint) {
  const auto d = displacements(params_for(1.0, 4.0, 1.25, 100), 0.64);
  EXPECT_NEAR(d.alpha_b, ref::kAlphaB, 1e-12);
  EXPECT_NEAR(d.alpha_c, ref::kAlphaC, 1e-12);
  EXPECT_THROW(displacements(params_for(1.0, 4.0, 1.25, 100), 1.5), PhaseError);

  const auto frame = critical_frame(params_for(1.0, 4.0, 1.25, 100));
  EXPECT_DOUBLE_EQ(frame.g_crit, 1.0);
  EXPECT_DOUBLE_EQ(frame.mu, 0.64);
  EXPECT_NEAR(frame.k, 82.0, 1e-12);
  EXPECT_THROW(critical_frame(params_for(1.0, 4.0, 0.5, 100)), PhaseError);
}

TEST(Coefficients, ReferencePoint) {
  const auto p = params_for(1.0, 4.0, 1.25, 100);
  const auto m = general_coefficients(p, ref::kAlphaB, ref::kAlphaC);
  EXPECT_NEAR(m.Omega_q, ref::kOmegaQ_Renorm, 1e-13);
  EXPECT_NEAR(m.G_eff, ref::kGEff, 1e-13);
  EXPECT_NEAR(m.eta, ref::kEta, 1e-13);
  EXPECT_NEAR(m.E_b, 0.0, 1e-12);
  EXPECT_NEAR(m.E_c, 0.0, 1e-12);
  EXPECT_THROW(general_coefficients(p, 1.0, 100.0), DomainError);
}

TEST(Coefficients, NormalPhaseAtZeroDisplacement) {
  // With no displacement the quadratic model is the bare one.
  const auto m = general_coefficients(params_for(1.0, 3.0, 0.4, 50), 0.0, 0.0);
  EXPECT_DOUBLE_EQ(m.Omega_q, 3.0);
  EXPECT_DOUBLE_EQ(m.G_eff, 0.4);
  EXPECT_DOUBLE_EQ(m.eta, 0.0);
  EXPECT_DOUBLE_EQ(m.E_b, 0.0);
  EXPECT_DOUBLE_EQ(m.E_c, 0.0);
}

TEST(CoefficientsProperty, StationarityAndClosedFormAgree) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pt = draw(rng);
    const double G = critical_coupling(pt.omega_m, pt.omega_q) / std::sqrt(pt.mu);
    const auto p = params_for(pt.omega_m, pt.omega_q, G, pt.n);
    const auto d = displacements(p, pt.mu);
    const auto general = general_coefficients(p, d.alpha_b, d.alpha_c);
    const auto closed = closed_form_coefficients(pt.omega_m, pt.omega_q, G, pt.mu);

    const double scale = std::sqrt(static_cast<double>(pt.n)) * std::max(pt.omega_m, pt.omega_q);
    EXPECT_LT(std::abs(general.E_b), 1e-12 * scale) << "trial " << trial;
    EXPECT_LT(std::abs(general.E_c), 1e-12 * scale) << "trial " << trial;
    EXPECT_NEAR(general.Omega_q, closed.Omega_q, 1e-11 * closed.Omega_q);
    EXPECT_NEAR(general.G_eff, closed.G_eff, 1e-11 * closed.G_eff);
    EXPECT_NEAR(general.eta, closed.eta, 1e-11 * std::max(closed.eta, pt.omega_q));
  }
}

TEST(Spectrum, ReferencePoint) {
  const auto s = polariton_frequencies(1.0, 4.0, 1.25, 0.64);
  ASSERT_TRUE(s.stable);
  EXPECT_NEAR(s.omega_plus, ref::kOmegaPlus, 1e-13);
  EXPECT_NEAR(*s.omega_minus, ref::kOmegaMinus, 1e-13);
  EXPECT_NEAR(s.theta, ref::kTheta, 1e-14);

  const auto branch = polariton_frequencies(1.0, 4.0, 0.64);
  EXPECT_NEAR(*branch.omega_minus, ref::kOmegaMinus, 1e-14);
  EXPECT_NEAR(branch.omega_plus, ref::kOmegaPlus, 1e-14);
}

TEST(Spectrum, CriticalPointIsExactZero) {
  const auto s = polariton_frequencies(1.0, 4.0, 1.0);
  ASSERT_TRUE(s.stable);
  EXPECT_EQ(*s.omega_minus, 0.0);
  EXPECT_NEAR(s.theta, 0.5 * std::atan2(8.0, -15.0), 1e-15);

  const auto r10 = polariton_frequencies(1.0, 10.0, 1.0);
  EXPECT_NEAR(r10.theta, ref::kThetaRatio10, 1e-14);
  EXPECT_NEAR(std::sin(r10.theta), ref::kSinThetaRatio10, 1e-15);
}

TEST(Spectrum, LiteralFormDetectsInstability) {
  // Inconsistent G above the self-consistent value drives omega_minus^2 < 0.
  const auto s = polariton_frequencies(1.0, 4.0, 3.0, 0.64);
  EXPECT_FALSE(s.stable);
  EXPECT_FALSE(s.omega_minus.has_value());
  EXPECT_LT(s.omega_minus_sq, 0.0);
}

TEST(SpectrumProperty, MatchesEquationsOfMotion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pt = draw(rng);
    const double G = critical_coupling(pt.omega_m, pt.omega_q) / std::sqrt(pt.mu);
    const auto model = closed_form_coefficients(pt.omega_m, pt.omega_q, G, pt.mu);
    const auto freqs = testsupport::dynamical_frequencies(model);
    const auto s = polariton_frequencies(pt.omega_m, pt.omega_q, pt.mu);
    ASSERT_EQ(freqs.size(), 2u);
    EXPECT_LT(rel(s.omega_plus, freqs[1]), 1e-10) << "trial " << trial;
    // The equations-of-motion solver is only accurate to ~eps * omega_plus.
    EXPECT_NEAR(*s.omega_minus, freqs[0], 1e-9 * s.omega_plus) << "trial " << trial;
  }
}

TEST(SpectrumProperty, Homogeneous) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pt = draw(rng);
    const double lam = scale(rng);
    const auto a = polariton_frequencies(pt.omega_m, pt.omega_q, pt.mu);
    const auto b = polariton_frequencies(lam * pt.omega_m, lam * pt.omega_q, pt.mu);
    EXPECT_LT(rel(lam * a.omega_plus, b.omega_plus), 1e-13);
    EXPECT_LT(rel(lam * *a.omega_minus, *b.omega_minus), 1e-13);
    EXPECT_NEAR(a.theta, b.theta, 1e-14);
  }
}

TEST(SpectrumProperty, LowerBranchSoftensTowardsCriticalPoint) {
  for (double ratio : {1.0, 4.0, 10.0}) {
    double previous = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 100; ++i) {
      const double mu = 0.01 * i;
      const double w = *polariton_frequencies(1.0, ratio, mu).omega_minus;
      EXPECT_LT(w, previous) << "ratio " << ratio << " mu " << mu;
      previous = w;
    }
    EXPECT_EQ(previous, 0.0);
  }
}

TEST(ContinuedBranch, SignChangeAcrossCriticalPoint) {
  EXPECT_GT(continued_omega_minus_sq(1.0, 4.0, 0.9), 0.0);
  EXPECT_EQ(continued_omega_minus_sq(1.0, 4.0, 1.0), 0.0);
  EXPECT_LT(continued_omega_minus_sq(1.0, 4.0, 1.1), 0.0);
  EXPECT_NEAR(continued_omega_minus_sq(1.0, 4.0, 0.64), ref::kOmegaMinus * ref::kOmegaMinus, 1e-14);
}

TEST(MuForOmegaMinus, InvertsBranch) {
  EXPECT_NEAR(mu_for_omega_minus(1.0, 4.0, ref::kOmegaMinus), 0.64, 1e-14);
  EXPECT_NEAR(mu_for_omega_minus(1.0, 10.0, 1e-6), ref::kHeadlineMu, 2.3e-16);
  EXPECT_THROW(mu_for_omega_minus(1.0, 4.0, 1.0), DomainError);
  EXPECT_THROW(mu_for_omega_minus(1.0, 4.0, 0.0), DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pt = draw(rng);
    const double w = *polariton_frequencies(pt.omega_m, pt.omega_q, pt.mu).omega_minus;
    EXPECT_LT(rel(mu_for_omega_minus(pt.omega_m, pt.omega_q, w), pt.mu), 1e-12) << "trial " << trial;
  }
}

TEST(Couplings, ReferencePoint) {
  const auto r = optomech_couplings(1.0, 1.0, polariton_frequencies(1.0, 4.0, 0.64));
  EXPECT_NEAR(r.g_minus, ref::kGMinus, 1e-13);
  EXPECT_NEAR(r.g_plus, ref::kGPlus, 1e-14);
  EXPECT_NEAR(r.coop_ratio, ref::kGMinus * ref::kGMinus, 1e-12);
  EXPECT_NEAR(r.chi, ref::kGMinus * ref::kGMinus / ref::kOmegaMinus, 1e-12);
  EXPECT_EQ(CouplingReport::chi_sign_note, "sector energies E(n) = omega_a*n - chi*n^2");
}

TEST(BranchOffset, ConsistentWithMu) {
  EXPECT_DOUBLE_EQ(branch_offset(0.64), 1.0 / (0.64 * 0.64) - 1.0);
  EXPECT_DOUBLE_EQ(mu_from_offset(branch_offset(0.64)), 0.64);
  EXPECT_EQ(branch_offset(1.0), 0.0);
  EXPECT_NEAR(offset_for_coupling(1.25, 1.0), 1.0 / (0.64 * 0.64) - 1.0, 1e-15);
  const double step = std::ldexp(1.0, -40);  // exact in 1 + step
  EXPECT_NEAR(offset_for_coupling(1.0 + step, 1.0) / (4.0 * step), 1.0, 1e-11);
  EXPECT_LT(offset_for_coupling(0.5, 1.0), 0.0);
  EXPECT_THROW(branch_spectrum(1.0, 4.0, -0.1), PhaseError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pt = draw(rng);
    const auto a = polariton_frequencies(pt.omega_m, pt.omega_q, pt.mu);
    const auto b = branch_spectrum(pt.omega_m, pt.omega_q, branch_offset(pt.mu));
    EXPECT_EQ(a.omega_plus, b.omega_plus);
    EXPECT_EQ(*a.omega_minus, *b.omega_minus);
  }
}

TEST(BranchOffset, ResolvesFrequenciesFarBelowDoubleMu) {
  // 1 - mu ~ 5e-17 is not representable as a double mu; the offset is.
  for (double w : {1e-6, 1e-7, 1e-8}) {
    const auto s = branch_spectrum(1.0, 10.0, offset_for_omega_minus(1.0, 10.0, w));
    EXPECT_NEAR(*s.omega_minus / w, 1.0, 1e-13) << w;
  }
}

TEST(Couplings, HeadlineNumbers) {
  const auto s = branch_spectrum(1.0, 10.0, offset_for_omega_minus(1.0, 10.0, 1e-6));
  EXPECT_NEAR(*s.omega_minus / 1e-6, 1.0, 1e-13);
  const auto r = optomech_couplings(1.0, 1.0, s);
  EXPECT_LT(rel(r.g_minus, ref::kHeadlineGMinus), 1e-9);
  EXPECT_LT(rel(r.coop_ratio, ref::kHeadlineCoop), 1e-9);
  EXPECT_LT(rel(r.chi, ref::kHeadlineChi), 1e-9);
}

TEST(Couplings, DivergenceGuard) {
  EXPECT_THROW(optomech_couplings(1.0, 1.0, polariton_frequencies(1.0, 4.0, 1.0)), CriticalDivergenceError);
  const auto unstable = polariton_frequencies(1.0, 4.0, 3.0, 0.64);
  EXPECT_THROW(optomech_couplings(1.0, 1.0, unstable), CriticalDivergenceError);
  const auto close = branch_spectrum(1.0, 4.0, offset_for_omega_minus(1.0, 4.0, 1e-7));
  EXPECT_NO_THROW(optomech_couplings(1.0, 1.0, close));
  EXPECT_THROW(optomech_couplings(1.0, 1.0, close, 1e-6), CriticalDivergenceError);
}

TEST(CouplingsProperty, SpectralWeightSumRule) {
  // sin^2 + cos^2 = 1  =>  g_-^2 w_- + g_+^2 w_+ = g0^2 w_m
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pt = draw(rng);
    if (pt.mu > 0.999) continue;
    const auto s = polariton_frequencies(pt.omega_m, pt.omega_q, pt.mu);
    const auto r = optomech_couplings(0.7, pt.omega_m, s);
    const double lhs = r.g_minus * r.g_minus * *s.omega_minus + r.g_plus * r.g_plus * s.omega_plus;
    EXPECT_LT(rel(lhs, 0.49 * pt.omega_m), 1e-12) << "trial " << trial;
    EXPECT_LT(rel(r.g_minus, r.g_plus * std::sqrt(s.omega_plus / *s.omega_minus) * std::tan(s.theta)), 1e-12);
  }
}

TEST(Kerr, Coefficient) {
  EXPECT_DOUBLE_EQ(kerr_coefficient(0.1, 1.0), 0.01);
  EXPECT_THROW(kerr_coefficient(0.1, 0.0), DomainError);
}

TEST(RequiredSpins, Scaling) {
  EXPECT_DOUBLE_EQ(required_spin_number(4.0, 1.0), 16.0);
  EXPECT_THROW(required_spin_number(1.0, 0.0), DomainError);
}
