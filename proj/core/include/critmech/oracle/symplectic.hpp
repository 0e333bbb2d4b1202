#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "critmech/criticality.hpp"

namespace critmech::oracle {

// Quadratic boson Hamiltonian of the form
//   sum_i w_i a_i^dag a_i + sum_{i<j} C_ij (a_i + a_i^dag)(a_j + a_j^dag)
//   + sum_i s_i (a_i + a_i^dag)^2
// Only the upper triangle of xx_couplings is read; the diagonal is ignored.
struct QuadraticForm {
  std::vector<double> mode_frequencies;
  Eigen::MatrixXd xx_couplings;
  std::vector<double> squeeze_terms;

  std::size_t modes() const { return mode_frequencies.size(); }
};

// Two-mode form (phonon b = mode 0, spin mode c = mode 1).
QuadraticForm quadratic_form(const QuadraticModel& model);

struct SymplecticOptions {
  // Squared frequencies with |w^2| <= zero_tolerance * ||V|| are treated as
  // an exact zero mode (||V|| = largest |eigenvalue|).
  double zero_tolerance = 16 * 2.220446049250313e-16;
};

// Normal modes. With quadratures x = (a + a^dag)/sqrt2, p = i(a^dag - a)/sqrt2
// and normal-mode quadratures q_k, pi_k:
//   x_i = sum_k position_map(i, k) q_k,   p_i = sum_k momentum_map(i, k) pi_k,
// so that H = sum_k w_k (d_k^dag d_k + 1/2) + const and
// (a_i + a_i^dag) = sum_k position_map(i, k) (d_k + d_k^dag).
struct SymplecticModes {
  std::vector<double> squared_frequencies;  // ascending, signed
  std::vector<double> frequencies;          // sqrt of the above; NaN where negative
  Eigen::MatrixXd position_map;
  Eigen::MatrixXd momentum_map;
  bool stable = false;
  std::optional<std::size_t> zero_mode;     // index of an exact zero mode
  double symplectic_error = 0.0;            // max |position_map * momentum_map^T - I|
};

// Solves the quadrature-space eigenproblem V = W^1/2 A W^1/2 (W kinetic,
// A potential). stable is false if any squared frequency is negative; a zero
// mode is reported (not thrown) and its maps are left at zero because the
// symplectic normalization is singular there.
SymplecticModes symplectic_diagonalize(const QuadraticForm& form, const SymplecticOptions& options = {});

enum class Precision { Double, Extended };

// Normal modes of the self-consistent superradiant-frame Hamiltonian at
// (omega_m, omega_q, mu): the form is assembled from the displaced-frame
// coefficients at the stationary displacements with G = G_c / sqrt(mu) and
// diagonalized in the requested precision. Extended precision (113-bit
// mantissa) keeps omega_minus accurate when omega_minus << omega_plus.
SymplecticModes superradiant_frame_modes(double omega_m, double omega_q, double mu,
                                         Precision precision = Precision::Double,
                                         const SymplecticOptions& options = {});

// Same, parametrized by the branch offset 1/mu^2 - 1 (see branch_offset),
// which stays exact arbitrarily close to the critical point.
SymplecticModes superradiant_frame_modes_at_offset(double omega_m, double omega_q, double offset,
                                                   Precision precision = Precision::Double,
                                                   const SymplecticOptions& options = {});

struct PolaritonCouplings {
  double g_plus = 0.0;   // coupling to the highest mode
  double g_minus = 0.0;  // coupling to the lowest mode
};

// Reads |position_map(phonon_mode, k)| * g0 for the two normal modes of a
// two-mode system, ordered (upper, lower). ContractError when the modes are
// unstable, CriticalDivergenceError when one of them is a zero mode.
PolaritonCouplings extract_polariton_couplings(const SymplecticModes& modes, double g0,
                                               std::size_t phonon_mode = 0);

}  // namespace critmech::oracle
