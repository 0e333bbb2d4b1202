#include "critmech/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "critmech/detail/frame_formulas.hpp"
#include "critmech/errors.hpp"

namespace critmech {

namespace {

bool positive(double x) { return std::isfinite(x) && x > 0.0; }
bool non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

void require_positive(double x, const char* what) {
  if (!positive(x)) throw DomainError(std::string(what) + " must be positive and finite");
}

void require_superradiant_mu(double mu) {
  if (!(mu > 0.0 && mu <= 1.0))
    throw PhaseError("mu = " + std::to_string(mu) + " outside (0, 1]: superradiant-frame formulas invalid");
}

double require_spins(const SystemParams& params) {
  if (!params.n_spins) throw ConfigurationError("number of spins N is required");
  return static_cast<double>(*params.n_spins);
}

// d = (omega_q / mu)^2; cross_term is the 16 G^2 mu omega_m omega_q piece
// under the root and product = omega_+^2 omega_-^2.
PolaritonSpectrum assemble_spectrum(double omega_m, double omega_q, double d, double cross_term, double product) {
  const double a = omega_m * omega_m;
  const double root = std::sqrt((a - d) * (a - d) + cross_term);

  PolaritonSpectrum s;
  const double plus_sq = 0.5 * (a + d + root);
  s.omega_plus = std::sqrt(plus_sq);
  // Product form avoids the cancellation in (a + d - root) / 2.
  s.omega_minus_sq = product / plus_sq;
  const double tol = 1e-12 * std::max(a, d);
  s.stable = s.omega_minus_sq >= -tol;
  if (s.stable) s.omega_minus = std::sqrt(std::max(0.0, s.omega_minus_sq));
  s.theta = 0.5 * std::atan2(2.0 * omega_m * omega_q, a - d);
  return s;
}

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Normal: return "normal";
    case Phase::Critical: return "critical";
    case Phase::Superradiant: return "superradiant";
  }
  return "unknown";
}

double SystemParams::collective_coupling() const {
  if (g_collective) return *g_collective;
  if (g_single && n_spins) return *g_single * std::sqrt(static_cast<double>(*n_spins));
  throw ConfigurationError("collective coupling undetermined: give G, or both g and N");
}

void SystemParams::validate() const {
  require_positive(omega_m, "omega_m");
  require_positive(omega_q, "omega_q");
  if (!non_negative(g0)) throw DomainError("g0 must be non-negative");
  if (!non_negative(omega_a)) throw DomainError("omega_a must be non-negative");
  if (n_spins && *n_spins == 0) throw DomainError("N must be a positive integer");
  if (g_single && !non_negative(*g_single)) throw DomainError("g must be non-negative");
  if (g_collective && !non_negative(*g_collective)) throw DomainError("G must be non-negative");

  if (!g_collective && !(g_single && n_spins))
    throw ConfigurationError("collective coupling undetermined: give G, or both g and N");
  if (g_collective && g_single && n_spins) {
    const double derived = *g_single * std::sqrt(static_cast<double>(*n_spins));
    const double scale = std::max(std::abs(derived), std::abs(*g_collective));
    if (std::abs(derived - *g_collective) > 1e-12 * scale)
      throw ConfigurationError("G inconsistent with g*sqrt(N)");
  }
}

double critical_coupling(double omega_m, double omega_q) {
  require_positive(omega_m, "omega_m");
  require_positive(omega_q, "omega_q");
  return 0.5 * std::sqrt(omega_m * omega_q);
}

double critical_parameter(double G, double g_crit) {
  require_positive(g_crit, "critical coupling");
  if (!std::isfinite(G)) throw DomainError("G must be finite");
  if (G < g_crit) throw PhaseError("normal phase: superradiant-frame formulas invalid (G < G_c)");
  const double ratio = g_crit / G;
  return ratio * ratio;
}

Phase classify_phase(double G, double g_crit) {
  if (std::abs(G - g_crit) <= 1e-12 * g_crit) return Phase::Critical;
  return G < g_crit ? Phase::Normal : Phase::Superradiant;
}

Displacements displacements(const SystemParams& params, double mu) {
  params.validate();
  require_superradiant_mu(mu);
  const double n = require_spins(params);
  const auto d = detail::stationary_displacements(params.omega_m, params.collective_coupling(), n, mu);
  return {d.alpha_b, d.alpha_c};
}

CriticalFrame critical_frame(const SystemParams& params) {
  params.validate();
  const double n = require_spins(params);
  CriticalFrame frame;
  frame.g_crit = critical_coupling(params.omega_m, params.omega_q);
  frame.mu = critical_parameter(params.collective_coupling(), frame.g_crit);
  const auto d = displacements(params, frame.mu);
  frame.alpha_b = d.alpha_b;
  frame.alpha_c = d.alpha_c;
  frame.k = n - d.alpha_c;
  return frame;
}

QuadraticModel general_coefficients(const SystemParams& params, double alpha_b, double alpha_c) {
  params.validate();
  const double n = require_spins(params);
  if (!non_negative(alpha_b) || !non_negative(alpha_c))
    throw DomainError("displacements must be non-negative");
  if (alpha_c >= n) throw DomainError("alpha_c must be below N");

  const auto c = detail::displaced_frame_coefficients(params.omega_m, params.omega_q,
                                                      params.collective_coupling(), n, alpha_b, alpha_c);
  return {params.omega_m, c.Omega_q, c.E_b, c.E_c, c.G_eff, c.eta};
}

QuadraticModel closed_form_coefficients(double omega_m, double omega_q, double G, double mu) {
  require_positive(omega_m, "omega_m");
  require_positive(omega_q, "omega_q");
  require_superradiant_mu(mu);
  QuadraticModel m;
  m.omega_m = omega_m;
  m.Omega_q = omega_q * (1.0 + mu) / (2.0 * mu);
  m.G_eff = G * mu * std::sqrt(2.0 / (1.0 + mu));
  m.eta = omega_q * (1.0 - mu) * (3.0 + mu) / (8.0 * mu * (1.0 + mu));
  return m;
}

PolaritonSpectrum polariton_frequencies(double omega_m, double omega_q, double G, double mu) {
  require_positive(omega_m, "omega_m");
  require_positive(omega_q, "omega_q");
  require_superradiant_mu(mu);
  if (!non_negative(G)) throw DomainError("G must be non-negative");
  const double cross = 16.0 * G * G * mu * omega_m * omega_q;
  const double d = (omega_q / mu) * (omega_q / mu);
  const double product = omega_m * omega_m * d - 4.0 * G * G * mu * omega_m * omega_q;
  return assemble_spectrum(omega_m, omega_q, d, cross, product);
}

PolaritonSpectrum polariton_frequencies(double omega_m, double omega_q, double mu) {
  require_superradiant_mu(mu);
  return branch_spectrum(omega_m, omega_q, branch_offset(mu));
}

double branch_offset(double mu) {
  require_positive(mu, "mu");
  return (1.0 - mu) * (1.0 + mu) / (mu * mu);
}

double mu_from_offset(double offset) {
  if (!(offset > -1.0) || !std::isfinite(offset)) throw DomainError("branch offset must exceed -1");
  return 1.0 / std::sqrt(1.0 + offset);
}

PolaritonSpectrum branch_spectrum(double omega_m, double omega_q, double offset) {
  require_positive(omega_m, "omega_m");
  require_positive(omega_q, "omega_q");
  if (!(offset >= 0.0) || !std::isfinite(offset))
    throw PhaseError("negative branch offset: superradiant-frame formulas invalid (G < G_c)");
  const double wmq = omega_m * omega_q;
  // On the branch 16 G^2 mu omega_m omega_q = 4 (omega_m omega_q)^2 and
  // (omega_q / mu)^2 = omega_q^2 (1 + offset).
  return assemble_spectrum(omega_m, omega_q, omega_q * omega_q * (1.0 + offset), 4.0 * wmq * wmq,
                           wmq * wmq * offset);
}

double continued_omega_minus_sq(double omega_m, double omega_q, double mu) {
  require_positive(omega_m, "omega_m");
  require_positive(omega_q, "omega_q");
  const double offset = branch_offset(mu);
  const double wmq = omega_m * omega_q;
  const double a = omega_m * omega_m;
  const double d = omega_q * omega_q * (1.0 + offset);
  const double plus_sq = 0.5 * (a + d + std::sqrt((a - d) * (a - d) + 4.0 * wmq * wmq));
  return wmq * wmq * offset / plus_sq;
}

double offset_for_omega_minus(double omega_m, double omega_q, double omega_minus) {
  require_positive(omega_m, "omega_m");
  require_positive(omega_q, "omega_q");
  if (!(omega_minus > 0.0 && omega_minus < omega_m))
    throw DomainError("omega_minus must lie in (0, omega_m) on the superradiant branch");
  const double a = omega_m * omega_m;
  const double w2 = omega_minus * omega_minus;
  return w2 * (a + omega_q * omega_q - w2) / (omega_q * omega_q * (a - w2));
}

double mu_for_omega_minus(double omega_m, double omega_q, double omega_minus) {
  return mu_from_offset(offset_for_omega_minus(omega_m, omega_q, omega_minus));
}

double offset_for_coupling(double G, double g_crit) {
  require_positive(g_crit, "critical coupling");
  if (!(G >= 0.0) || !std::isfinite(G)) throw DomainError("G must be non-negative and finite");
  // q = 1/mu - 1 = (G - G_c)(G + G_c) / G_c^2, then 1/mu^2 - 1 = q (2 + q).
  const double q = (G - g_crit) * (G + g_crit) / (g_crit * g_crit);
  return q * (2.0 + q);
}

CouplingReport optomech_couplings(double g0, double omega_m, const PolaritonSpectrum& spectrum,
                                  double omega_floor) {
  if (!non_negative(g0)) throw DomainError("g0 must be non-negative");
  require_positive(omega_m, "omega_m");
  if (!non_negative(omega_floor)) throw DomainError("omega floor must be non-negative");
  if (!spectrum.stable || !spectrum.omega_minus)
    throw CriticalDivergenceError("beyond CP: omega_minus^2 < 0, lower polariton unstable");
  const double w_minus = *spectrum.omega_minus;
  if (!(w_minus > omega_floor * omega_m) || w_minus <= 0.0)
    throw CriticalDivergenceError(
        "at/beyond CP: coupling diverges; choose G < G_c-side offset or finite omega_minus");
  require_positive(spectrum.omega_plus, "omega_plus");

  CouplingReport r;
  r.g_plus = g0 * std::sqrt(omega_m / spectrum.omega_plus) * std::cos(spectrum.theta);
  r.g_minus = g0 * std::sqrt(omega_m / w_minus) * std::sin(spectrum.theta);
  const double enhancement = std::sqrt(omega_m / w_minus) * std::sin(spectrum.theta);
  r.coop_ratio = enhancement * enhancement;
  r.chi = kerr_coefficient(r.g_minus, w_minus);
  return r;
}

double kerr_coefficient(double g_minus, double omega_minus) {
  if (!(omega_minus > 0.0) || !std::isfinite(omega_minus))
    throw DomainError("omega_minus must be positive for a finite Kerr coefficient");
  return g_minus * g_minus / omega_minus;
}

double required_spin_number(double G, double g_single) {
  require_positive(g_single, "single-spin coupling");
  if (!non_negative(G)) throw DomainError("G must be non-negative");
  const double ratio = G / g_single;
  return ratio * ratio;
}

}  // namespace critmech
