#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "critmech/errors.hpp"
#include "critmech/oracle/dicke.hpp"
#include "critmech/oracle/eigensolve.hpp"

using namespace critmech;
using namespace critmech::oracle;

namespace {

Eigen::VectorXd levels(const OperatorMatrix& h) {
  EigensolveOptions opts;
  opts.compute_vectors = false;
  opts.check_residuals = false;
  return hermitian_eigensolve(h, opts).eigenvalues;
}

}  // namespace

TEST(Dicke, HermitianRealAndParityConserving) {
  const auto space = build_space({6}, 4);
  const auto h = dicke_hamiltonian(space, {1.0, 4.0, 1.25});
  EXPECT_LT(h.hermiticity_error(), 1e-15);
  EXPECT_TRUE(h.is_real());
  EXPECT_LT(h.commutator_max_abs(space.parity()), 1e-13);
}

TEST(Dicke, MatchesOperatorConstruction) {
  const auto space = build_space({5}, 3);
  const DickeCoupling c{1.3, 2.1, 0.9};
  const auto b = space.annihilation(0);
  const auto built = c.omega_m * space.number(0) + c.omega_q * space.spin_z() +
                     (c.G / std::sqrt(3.0)) * ((b + b.adjoint()) * (space.spin_plus() + space.spin_minus()));
  EXPECT_LT((dicke_hamiltonian(space, c) - built).max_abs(), 1e-14);
}

TEST(Dicke, ParitySectorsPartitionSpectrum) {
  const auto space = build_space({8}, 4);
  const DickeCoupling c{1.0, 2.0, 1.1};
  const auto full = levels(dicke_hamiltonian(space, c));
  const auto even = dicke_parity_sector(space, c, +1);
  const auto odd = dicke_parity_sector(space, c, -1);
  EXPECT_EQ(even.basis.size() + odd.basis.size(), space.dimension());

  std::vector<double> merged;
  for (double v : levels(even.hamiltonian)) merged.push_back(v);
  for (double v : levels(odd.hamiltonian)) merged.push_back(v);
  std::sort(merged.begin(), merged.end());
  for (std::size_t i = 0; i < merged.size(); ++i)
    EXPECT_NEAR(merged[i], full(static_cast<Eigen::Index>(i)), 1e-11);
  EXPECT_THROW(dicke_parity_sector(space, c, 0), DomainError);
}

TEST(Dicke, HolsteinPrimakoffIsExactForSpinCountDivisor) {
  const int n = 4;
  const DickeCoupling c{1.0, 3.0, 1.4};
  const auto spin = levels(dicke_hamiltonian(build_space({9}, n), c));
  const auto hp = levels(holstein_primakoff_hamiltonian(build_space({9, n}), c, n));
  ASSERT_EQ(spin.size(), hp.size());
  EXPECT_LT((spin - hp).cwiseAbs().maxCoeff(), 1e-11);

  const auto hp2 = levels(holstein_primakoff_hamiltonian(build_space({9, n}), c, n, HpDivisor::TwiceSpinCount));
  EXPECT_GT((spin - hp2).cwiseAbs().maxCoeff(), 1e-3);
}

TEST(Dicke, WrongSpaceShape) {
  EXPECT_THROW(dicke_hamiltonian(build_space({3, 3}), {}), ConfigurationError);
  EXPECT_THROW(holstein_primakoff_hamiltonian(build_space({3}, 2), {}, 2), ConfigurationError);
}

TEST(DickeGroundState, UncoupledIsFullyPolarized) {
  const auto gs = dicke_ground_state(build_space({4}, 16), {1.0, 4.0, 0.0});
  EXPECT_DOUBLE_EQ(gs.energy, -8.0 * 4.0);
  EXPECT_DOUBLE_EQ(gs.jz_over_j, -1.0);
  EXPECT_NEAR(gs.full_gap, 1.0, 1e-12);
}

TEST(DickeGroundState, SuperradiantTrend) {
  // Exact-diagonalization values at (1, 4, 1.25), phonon cutoff 60, from an
  // independent dense solver.
  const DickeCoupling c{1.0, 4.0, 1.25};
  const auto g8 = dicke_ground_state(build_space({60}, 8), c);
  const auto g16 = dicke_ground_state(build_space({60}, 16), c);
  EXPECT_NEAR(g8.jz_over_j, -0.6567, 5e-4);
  EXPECT_NEAR(g16.jz_over_j, -0.6478, 5e-4);
  EXPECT_NEAR(g8.sector_gap, 0.7063, 5e-4);
  EXPECT_NEAR(g16.sector_gap, 0.7433, 5e-4);
  EXPECT_LT(std::abs(g16.jz_over_j + 0.64), std::abs(g8.jz_over_j + 0.64));
  // Tunnelling splitting of the ground doublet closes with N.
  EXPECT_LT(g16.full_gap, g8.full_gap);
  EXPECT_LT(g16.full_gap, 1e-2);
}

TEST(DickeGroundState, TruncationConvergedAtCutoff80) {
  const DickeCoupling c{1.0, 4.0, 1.25};
  const auto ground = [&c](int cutoff, int n) {
    const auto space = build_space({cutoff}, n);
    return std::min(levels(dicke_parity_sector(space, c, +1).hamiltonian)(0),
                    levels(dicke_parity_sector(space, c, -1).hamiltonian)(0));
  };
  for (int n : {8, 16, 24}) {
    const double e80 = ground(80, n);
    const double e160 = ground(160, n);
    EXPECT_LT(std::abs(e160 - e80), 1e-8 * std::abs(e80)) << "N=" << n;
  }
}

TEST(QuadraticHamiltonian, GapsMatchAnalyticSpectrum) {
  const auto model = closed_form_coefficients(1.0, 4.0, 1.25, 0.64);
  const auto h = quadratic_hamiltonian(build_space({30, 30}), model);
  const auto e = levels(h);
  const auto s = polariton_frequencies(1.0, 4.0, 0.64);
  EXPECT_NEAR(e(1) - e(0), *s.omega_minus, 1e-7);
  EXPECT_NEAR(e(2) - e(0), 2.0 * *s.omega_minus, 1e-6);
}
