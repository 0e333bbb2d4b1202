#pragma once

// Closed-form analytics of the spin-ensemble / nanobeam / cavity system in
// the thermodynamic limit: critical coupling, superradiant displacements,
// effective quadratic Hamiltonian, polariton spectrum and the enhanced
// cavity couplings.
//
// Conventions. Frequencies are doubles in units of omega_m unless a caller
// chooses otherwise; every formula is homogeneous, so any common unit works.
// The spin transition frequency is called omega_q throughout (some texts
// write omega_b for the same quantity in the polariton formulas).
//
//   H = omega_m b^dag b + omega_q c^dag c + G (b + b^dag)(xi c + c^dag xi)
//
// with G = g sqrt(N) the collective coupling.

#include <cstdint>
#include <optional>
#include <string_view>

namespace critmech {

// Default lower bound on omega_minus, relative to omega_m, below which the
// couplings are reported as divergent rather than evaluated.
inline constexpr double kDefaultOmegaFloor = 1e-9;

struct SystemParams {
  double omega_m = 1.0;
  double omega_q = 1.0;
  std::optional<double> g_single;
  std::optional<std::uint64_t> n_spins;
  std::optional<double> g_collective;
  double g0 = 0.0;
  double omega_a = 0.0;

  // G, either as given or as g_single * sqrt(n_spins).
  double collective_coupling() const;

  // Throws DomainError / ConfigurationError when an invariant is broken:
  // positive omega_m and omega_q, non-negative g0 and omega_a, G
  // determinable, and g_collective consistent with g_single * sqrt(N)
  // (1e-12 relative) when all three are present.
  void validate() const;
};

struct Displacements {
  double alpha_b = 0.0;
  double alpha_c = 0.0;
};

struct CriticalFrame {
  double g_crit = 0.0;
  double mu = 1.0;
  double alpha_b = 0.0;
  double alpha_c = 0.0;
  double k = 0.0;  // N - alpha_c
};

// Coefficients of
//   omega_m b^dag b + Omega_q c^dag c + E_b (b + b^dag) + E_c (c + c^dag)
//   + G_eff (b + b^dag)(c + c^dag) + eta (c + c^dag)^2
struct QuadraticModel {
  double omega_m = 0.0;
  double Omega_q = 0.0;
  double E_b = 0.0;
  double E_c = 0.0;
  double G_eff = 0.0;
  double eta = 0.0;
};

struct PolaritonSpectrum {
  double omega_plus = 0.0;
  double omega_minus_sq = 0.0;
  std::optional<double> omega_minus;  // set only when stable
  double theta = 0.0;                 // in (0, pi/2)
  bool stable = false;
};

struct CouplingReport {
  // Exact photon-number sectors of the reduced Hamiltonian have ground
  // energies omega_a n - chi n^2; chi itself is reported as a magnitude.
  static constexpr std::string_view chi_sign_note =
      "sector energies E(n) = omega_a*n - chi*n^2";

  double g_plus = 0.0;
  double g_minus = 0.0;
  double chi = 0.0;
  double coop_ratio = 0.0;  // C_eff / C_0 = (g_minus / g0)^2
};

enum class Phase { Normal, Critical, Superradiant };

std::string_view to_string(Phase phase);

// G_c = sqrt(omega_m omega_q) / 2.
double critical_coupling(double omega_m, double omega_q);

// mu = G_c^2 / G^2 in (0, 1]. PhaseError when G < g_crit.
double critical_parameter(double G, double g_crit);

// Normal / critical / superradiant, with |G - G_c| <= 1e-12 G_c counted as
// critical.
Phase classify_phase(double G, double g_crit);

// Stationary displacements
//   sqrt(alpha_b) = (2G / omega_m) sqrt(N (1 - mu^2) / 4)
//   sqrt(alpha_c) = sqrt(N (1 - mu) / 2)
Displacements displacements(const SystemParams& params, double mu);

// Full critical frame from params (needs N and G >= G_c).
CriticalFrame critical_frame(const SystemParams& params);

// Coefficients of the expanded displaced-frame Hamiltonian for arbitrary
// (alpha_b, alpha_c). E_b and E_c vanish exactly at the stationary
// displacements.
QuadraticModel general_coefficients(const SystemParams& params, double alpha_b, double alpha_c);

// The same coefficients after eliminating the displacements in favour of
// mu. E_b = E_c = 0 by construction.
QuadraticModel closed_form_coefficients(double omega_m, double omega_q, double G, double mu);

// Polariton spectrum of the quadratic model, evaluated literally for
// independent G and mu:
//   omega_pm^2 = 1/2 [omega_m^2 + omega_q^2/mu^2
//                     +- sqrt((omega_m^2 - omega_q^2/mu^2)^2 + 16 G^2 mu omega_m omega_q)]
//   theta = 1/2 atan2(2 omega_m omega_q, omega_m^2 - omega_q^2/mu^2)
PolaritonSpectrum polariton_frequencies(double omega_m, double omega_q, double G, double mu);

// Same spectrum on the self-consistent branch G = G_c / sqrt(mu). Uses
// 16 G^2 mu omega_m omega_q = 4 omega_m^2 omega_q^2, so omega_minus_sq is
// exactly zero at mu = 1.
PolaritonSpectrum polariton_frequencies(double omega_m, double omega_q, double mu);

// Near the critical point mu itself is a poor coordinate: a double cannot
// hold 1 - mu to better than ~1e-16 absolute, which for omega_minus <<
// omega_m is a large relative error. The branch offset
//   offset = 1/mu^2 - 1 = (G/G_c)^4 - 1  (>= 0 on the superradiant side)
// carries the same information without cancellation, and
//   omega_+^2 omega_-^2 = (omega_m omega_q)^2 offset.
double branch_offset(double mu);
double mu_from_offset(double offset);
// offset from G and G_c, built from (G - G_c)(G + G_c) / G_c^2.
double offset_for_coupling(double G, double g_crit);

// Spectrum on the self-consistent branch at the given offset. PhaseError
// when offset < 0.
PolaritonSpectrum branch_spectrum(double omega_m, double omega_q, double offset);

// omega_minus^2 on the self-consistent branch, for any mu > 0. Negative
// for mu > 1 (G < G_c); used to chart the unstable side of the transition.
double continued_omega_minus_sq(double omega_m, double omega_q, double mu);

// Inverse of the self-consistent branch: the offset (or mu) at which the
// lower polariton has frequency omega_minus. Requires 0 < omega_minus <
// omega_m; omega_minus -> omega_m corresponds to mu -> 0.
double offset_for_omega_minus(double omega_m, double omega_q, double omega_minus);
double mu_for_omega_minus(double omega_m, double omega_q, double omega_minus);

// g_plus = g0 sqrt(omega_m/omega_plus) cos(theta),
// g_minus = g0 sqrt(omega_m/omega_minus) sin(theta).
// CriticalDivergenceError when the spectrum is unstable or omega_minus <=
// omega_floor * omega_m.
CouplingReport optomech_couplings(double g0, double omega_m, const PolaritonSpectrum& spectrum,
                                  double omega_floor = kDefaultOmegaFloor);

// chi = g_minus^2 / omega_minus.
double kerr_coefficient(double g_minus, double omega_minus);

// Number of spins N = (G / g)^2 needed to put the collective coupling at G.
double required_spin_number(double G, double g_single);

}  // namespace critmech
