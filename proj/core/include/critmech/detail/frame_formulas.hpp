#pragma once

// Scalar-generic forms of the displaced-frame formulas. The double API in
// criticality.hpp wraps these; the oracle instantiates them in extended
// precision so that near-critical quadratic forms are assembled without
// double rounding.

#include <cmath>

namespace critmech::detail {

template <typename Real>
struct BasicDisplacements {
  Real alpha_b;
  Real alpha_c;
};

template <typename Real>
struct BasicCoefficients {
  Real Omega_q;
  Real E_b;
  Real E_c;
  Real G_eff;
  Real eta;
};

template <typename Real>
BasicDisplacements<Real> stationary_displacements(const Real& omega_m, const Real& G,
                                                  const Real& n_spins, const Real& mu) {
  using std::sqrt;
  const Real one(1);
  const Real root_b = (Real(2) * G / omega_m) * sqrt(n_spins * (one - mu * mu) / Real(4));
  const Real root_c = sqrt(n_spins * (one - mu) / Real(2));
  return {root_b * root_b, root_c * root_c};
}

// E_c carries a 1/k on its second term; without it E_c = 0 is not
// solved by the stationary displacements.
template <typename Real>
BasicCoefficients<Real> displaced_frame_coefficients(const Real& omega_m, const Real& omega_q,
                                                     const Real& G, const Real& n_spins,
                                                     const Real& alpha_b, const Real& alpha_c) {
  using std::sqrt;
  const Real k = n_spins - alpha_c;
  const Real half_n = n_spins / Real(2);
  const Real root_ab_ac = sqrt(alpha_b * alpha_c / (n_spins * k));

  BasicCoefficients<Real> out;
  out.Omega_q = omega_q + Real(2) * G * root_ab_ac;
  out.E_b = omega_m * sqrt(alpha_b) - Real(2) * G * sqrt(k * alpha_c / n_spins);
  out.E_c = -omega_q * sqrt(alpha_c) + Real(4) * G * sqrt(k * alpha_b / n_spins) * (half_n - alpha_c) / k;
  out.G_eff = Real(2) * G * (half_n - alpha_c) / sqrt(n_spins * k);
  out.eta = (G / (Real(2) * k)) * root_ab_ac * (Real(2) * k + alpha_c);
  return out;
}

}  // namespace critmech::detail
