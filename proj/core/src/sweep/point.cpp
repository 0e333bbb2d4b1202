#include "point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "critmech/oracle/symplectic.hpp"

namespace critmech::sweep::detail {

namespace {

std::optional<double> lookup(const std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

bool wants(const std::vector<std::string>& outputs, const std::string& key) {
  return std::find(outputs.begin(), outputs.end(), key) != outputs.end();
}

bool wants_couplings(const std::vector<std::string>& outputs) {
  for (const char* key : {"g_minus_over_g0", "g_plus_over_g0", "chi", "coop_ratio"})
    if (wants(outputs, key)) return true;
  return false;
}

double rel_delta(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

ResolvedPoint resolve_point(const std::map<std::string, double>& params) {
  ResolvedPoint p;
  p.omega_m = lookup(params, "omega_m").value_or(1.0);
  if (!(p.omega_m > 0.0) || !std::isfinite(p.omega_m)) throw DomainError("omega_m must be positive");

  if (const auto wq = lookup(params, "omega_q")) {
    p.omega_q = *wq;
  } else if (const auto ratio = lookup(params, "omega_q_over_omega_m")) {
    p.omega_q = *ratio * p.omega_m;
  } else {
    throw ConfigurationError("omega_q or omega_q_over_omega_m is required");
  }
  if (!(p.omega_q > 0.0) || !std::isfinite(p.omega_q)) throw DomainError("omega_q must be positive");

  p.g0 = lookup(params, "g0").value_or(1.0);
  p.omega_a = lookup(params, "omega_a").value_or(0.0);
  if (!(p.g0 >= 0.0)) throw DomainError("g0 must be non-negative");

  const double g_crit = critical_coupling(p.omega_m, p.omega_q);
  auto from_G = [&](double G) {
    if (!(G > 0.0) || !std::isfinite(G)) throw DomainError("G must be positive");
    p.offset = offset_for_coupling(G, g_crit);
    p.mu = (g_crit / G) * (g_crit / G);
  };

  if (const auto G = lookup(params, "G")) {
    from_G(*G);
  } else if (const auto x = lookup(params, "G_over_omega_m")) {
    from_G(*x * p.omega_m);
  } else if (const auto mu = lookup(params, "mu")) {
    if (!(*mu > 0.0) || !std::isfinite(*mu)) throw DomainError("mu must be positive");
    p.mu = *mu;
    p.offset = branch_offset(*mu);
  } else if (const auto r = lookup(params, "omega_m_over_omega_minus")) {
    if (!(*r > 1.0) || !std::isfinite(*r))
      throw OutOfBranch("omega_m / omega_minus must exceed 1 on the superradiant branch");
    p.offset = offset_for_omega_minus(p.omega_m, p.omega_q, p.omega_m / *r);
    p.mu = mu_from_offset(p.offset);
  } else if (const auto d = lookup(params, "Gc_minus_G_over_omega_m")) {
    if (!std::isfinite(*d)) throw DomainError("Gc_minus_G_over_omega_m must be finite");
    // Mirrored onto the superradiant side: G = G_c + |d| omega_m.
    const double G = g_crit + std::abs(*d) * p.omega_m;
    p.offset = offset_for_coupling(G, g_crit);
    p.mu = (g_crit / G) * (g_crit / G);
  } else {
    throw ConfigurationError("no coupling selector (G, G_over_omega_m, mu, omega_m_over_omega_minus, "
                             "Gc_minus_G_over_omega_m)");
  }
  return p;
}

PointOutcome evaluate_point(const std::map<std::string, double>& params, const std::vector<std::string>& outputs,
                            bool oracle_check, double omega_floor) {
  PointOutcome out;
  for (const auto& key : outputs) out.values[key] = std::nullopt;
  auto set = [&](const std::string& key, double v) {
    const auto it = out.values.find(key);
    if (it != out.values.end()) it->second = v;
  };

  ResolvedPoint p;
  try {
    p = resolve_point(params);
  } catch (const OutOfBranch&) {
    out.valid = false;
    out.reason = kReasonOutOfBranch;
    return out;
  } catch (const Error&) {
    out.valid = false;
    out.reason = kReasonInvalidInput;
    return out;
  }

  const double wm2 = p.omega_m * p.omega_m;
  const double g_crit = critical_coupling(p.omega_m, p.omega_q);
  set("mu", p.mu);
  set("G_over_omega_m", g_crit / std::sqrt(p.mu) / p.omega_m);
  if (p.offset < 0.0) {
    set("omega_minus_sq_over_omega_m_sq", continued_omega_minus_sq(p.omega_m, p.omega_q, p.mu) / wm2);
    out.stable = false;
    if (wants_couplings(outputs)) {
      out.valid = false;
      out.reason = kReasonNormalPhase;
    }
    return out;
  }

  const PolaritonSpectrum spectrum = branch_spectrum(p.omega_m, p.omega_q, p.offset);
  out.stable = spectrum.stable;
  set("omega_minus_sq_over_omega_m_sq", spectrum.omega_minus_sq / wm2);
  const double w_minus = spectrum.omega_minus.value_or(0.0);
  set("omega_minus", w_minus);
  set("omega_plus", spectrum.omega_plus);
  set("omega_minus_over_omega_m", w_minus / p.omega_m);
  set("omega_plus_over_omega_m", spectrum.omega_plus / p.omega_m);
  set("theta", spectrum.theta);

  std::optional<CouplingReport> unit_couplings;
  try {
    unit_couplings = optomech_couplings(1.0, p.omega_m, spectrum, omega_floor);
  } catch (const CriticalDivergenceError&) {
    if (wants_couplings(outputs)) {
      out.valid = false;
      out.reason = kReasonCpDivergence;
    }
  }
  if (unit_couplings) {
    const double g_minus = p.g0 * unit_couplings->g_minus;
    set("g_minus_over_g0", unit_couplings->g_minus);
    set("g_plus_over_g0", unit_couplings->g_plus);
    set("coop_ratio", unit_couplings->coop_ratio);
    set("chi", kerr_coefficient(g_minus, w_minus));
  }

  if (oracle_check) {
    const auto modes = oracle::superradiant_frame_modes_at_offset(p.omega_m, p.omega_q, p.offset,
                                                                  oracle::Precision::Extended);
    const double o_minus = modes.zero_mode ? 0.0 : modes.frequencies[0];
    const double o_plus = modes.frequencies[1];
    out.values[kOracleOmegaMinus] = o_minus;
    out.values[kOracleOmegaPlus] = o_plus;
    double delta = std::max(rel_delta(w_minus, o_minus), rel_delta(spectrum.omega_plus, o_plus));
    out.values[kOracleGMinus] = std::nullopt;
    out.values[kOracleGPlus] = std::nullopt;
    if (unit_couplings && !modes.zero_mode && modes.stable) {
      const auto g = oracle::extract_polariton_couplings(modes, 1.0);
      out.values[kOracleGMinus] = g.g_minus;
      out.values[kOracleGPlus] = g.g_plus;
      delta = std::max({delta, rel_delta(unit_couplings->g_minus, g.g_minus),
                        rel_delta(unit_couplings->g_plus, g.g_plus)});
    }
    out.values[kOracleDelta] = delta;
  }
  return out;
}

}  // namespace critmech::sweep::detail
