#include <complex>

#include <gtest/gtest.h>

#include "critmech/errors.hpp"
#include "critmech/oracle/eigensolve.hpp"
#include "critmech/oracle/space.hpp"

using namespace critmech;
using namespace critmech::oracle;

TEST(TruncatedSpace, Dimensions) {
  EXPECT_EQ(build_space({5}, 2).dimension(), 18u);
  EXPECT_EQ(build_space({3, 3}).dimension(), 16u);
  EXPECT_EQ(build_space({60}, 24).dimension(), 1525u);
  EXPECT_EQ(build_space({4}, 3).spin_dimension(), 4u);
  EXPECT_DOUBLE_EQ(build_space({4}, 3).spin_j(), 1.5);
}

TEST(TruncatedSpace, Rejections) {
  EXPECT_THROW(build_space({0}), DomainError);
  EXPECT_THROW(build_space({200, 200}), ResourceError);
  EXPECT_THROW(build_space({10}, 8, 50), ResourceError);
  EXPECT_THROW(build_space({3}).spin_z(), ConfigurationError);
  EXPECT_THROW(build_space({3}).annihilation(1), ConfigurationError);
}

TEST(TruncatedSpace, IndexRoundTrip) {
  const auto space = build_space({2, 3}, 2);
  for (std::size_t i = 0; i < space.dimension(); ++i) EXPECT_EQ(space.index_of(space.state_at(i)), i);
  const BasisState s{{1, 2}, 1};
  EXPECT_EQ(space.state_at(space.index_of(s)).occupations, s.occupations);
  // mode 0 most significant, spin least
  EXPECT_EQ(space.index_of({{1, 0}, 0}), 12u);
  EXPECT_EQ(space.index_of({{0, 0}, 1}), 1u);
}

TEST(LadderOperators, CanonicalCommutatorBelowCutoff) {
  const int cutoff = 8;
  const auto space = build_space({cutoff});
  const auto a = space.annihilation(0);
  const auto ad = space.creation(0);
  const auto comm = (a * ad - ad * a).entries();
  for (int n = 0; n < cutoff; ++n) EXPECT_NEAR(comm(n, n).real(), 1.0, 1e-14);
  // Truncation artefact in the last level: [a, a^dag] = -cutoff there.
  EXPECT_NEAR(comm(cutoff, cutoff).real(), -static_cast<double>(cutoff), 1e-12);
  EXPECT_EQ((ad - a.adjoint()).max_abs(), 0.0);
  const auto num = space.number(0);
  EXPECT_LT((ad * a - num).max_abs(), 1e-14);
}

TEST(LadderOperators, ModesCommute) {
  const auto space = build_space({3, 4});
  EXPECT_LT(space.annihilation(0).commutator_max_abs(space.creation(1)), 1e-15);
  EXPECT_LT(space.annihilation(0).commutator_max_abs(space.annihilation(1)), 1e-15);
}

TEST(SpinOperators, AngularMomentumAlgebra) {
  for (int two_j : {1, 2, 5, 12}) {
    const auto space = build_space({1}, two_j);
    const auto jz = space.spin_z();
    const auto jp = space.spin_plus();
    const auto jm = space.spin_minus();
    EXPECT_LT((jp * jm - jm * jp - 2.0 * jz).max_abs(), 1e-12) << two_j;
    EXPECT_LT((jz * jp - jp * jz - jp).max_abs(), 1e-12) << two_j;
    const double j = 0.5 * two_j;
    const auto jx = space.spin_x();
    const auto casimir = jx * jx + jz * jz + (std::complex<double>(0, -0.5) * (jp - jm)) *
                                                  (std::complex<double>(0, -0.5) * (jp - jm));
    EXPECT_LT((casimir - j * (j + 1) * space.identity()).max_abs(), 1e-11) << two_j;
  }
}

TEST(Parity, DiagonalSigns) {
  const auto space = build_space({2}, 2);
  const auto p = space.parity();
  EXPECT_LT((p * p - space.identity()).max_abs(), 1e-15);
  EXPECT_EQ(space.parity_of(0), 1);   // n=0, m=-j
  EXPECT_EQ(space.parity_of(1), -1);  // n=0, m=-j+1
  EXPECT_EQ(space.parity_of(3), -1);  // n=1, m=-j
}

TEST(Eigensolve, HarmonicLadder) {
  const auto space = build_space({10});
  const auto h = 0.7 * space.number(0);
  const auto res = hermitian_eigensolve(h);
  for (int n = 0; n <= 10; ++n) EXPECT_NEAR(res.eigenvalues(n), 0.7 * n, 1e-13);
  EXPECT_LT(res.max_residual, 1e-12);
}

TEST(Eigensolve, ComplexHermitian) {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, std::complex<double>(0, 1), std::complex<double>(0, -1), 1.0;
  const auto res = hermitian_eigensolve(OperatorMatrix(m));
  EXPECT_NEAR(res.eigenvalues(0), 0.0, 1e-14);
  EXPECT_NEAR(res.eigenvalues(1), 2.0, 1e-14);
}

TEST(Eigensolve, RejectsNonHermitian) {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  EXPECT_THROW(hermitian_eigensolve(OperatorMatrix(m)), ContractError);
}
