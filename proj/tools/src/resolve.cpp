#include <cmath>
#include <numbers>

#include "critmech/errors.hpp"
#include "critmech/units.hpp"
#include "critmech/sweep/export.hpp"
#include "inputs.hpp"

namespace critmech::cli {

namespace {

double require_positive(std::optional<double> v, const char* what) {
  if (!v || !(*v > 0.0) || !std::isfinite(*v)) throw DomainError(std::string(what) + " must be positive");
  return *v;
}

// Value of a profile frequency expressed in `unit`.
double in_unit(const Frequency& f, FrequencyUnit unit) {
  const double rad = to_rad_per_second(f);
  return unit == FrequencyUnit::Hertz ? rad / (2.0 * std::numbers::pi) : rad;
}

}  // namespace

void kv(std::ostream& os, const std::string& key, double value) {
  os << key << '=' << sweep::format_number(value) << '\n';
}

void kv(std::ostream& os, const std::string& key, const std::string& value) { os << key << '=' << value << '\n'; }

Point resolve(const Inputs& raw) {
  Inputs in = raw;
  FrequencyUnit unit = FrequencyUnit::OmegaM;
  if (in.profile) {
    const auto prof = find_profile(*in.profile);
    if (!prof) throw ConfigurationError("unknown profile '" + *in.profile + "' (nv-nanobeam)");
    unit = in.unit ? parse_frequency_unit(*in.unit) : FrequencyUnit::Hertz;
    if (unit == FrequencyUnit::OmegaM) throw ConfigurationError("a physical profile needs an absolute unit");
    const bool has_selector = in.mu || in.G || in.N || in.omega_m_over_omega_minus || in.omega_minus;
    if (!in.omega_m) in.omega_m = in_unit(prof->omega_m, unit);
    if (!in.omega_q && !in.ratio) in.omega_q = in_unit(prof->omega_q, unit);
    if (!in.g) in.g = in_unit(prof->g_single, unit);
    if (!has_selector) in.omega_minus = in_unit(prof->omega_minus, unit);
  } else if (in.unit) {
    unit = parse_frequency_unit(*in.unit);
  }

  Point p;
  double wm = 1.0;
  if (unit == FrequencyUnit::OmegaM) {
    if (in.omega_m) wm = require_positive(in.omega_m, "omega_m");
  } else {
    if (!in.omega_m) throw ConfigurationError("omega_m is required with absolute units");
    wm = require_positive(in.omega_m, "omega_m");
    p.omega_m_rad_per_s = to_rad_per_second({wm, unit});
  }
  // Every frequency shares the unit of omega_m, so a plain ratio normalizes.
  const auto norm = [wm](double x) { return x / wm; };

  if (in.omega_q && in.ratio) {
    const double a = norm(*in.omega_q);
    if (std::abs(a - *in.ratio) > 1e-12 * std::max(a, *in.ratio))
      throw ConfigurationError("omega_q and ratio disagree");
  }
  if (in.omega_q) {
    p.omega_q = norm(require_positive(in.omega_q, "omega_q"));
  } else if (in.ratio) {
    p.omega_q = require_positive(in.ratio, "ratio");
  } else {
    throw ConfigurationError("omega_q (or ratio = omega_q / omega_m) is required");
  }
  if (in.g0) {
    if (!(*in.g0 >= 0.0)) throw DomainError("g0 must be non-negative");
    p.g0 = norm(*in.g0);
  }
  if (in.omega_a) p.omega_a = norm(*in.omega_a);
  if (in.g) p.g_single = norm(require_positive(in.g, "g"));
  if (in.N) {
    if (!(*in.N >= 1.0) || std::floor(*in.N) != *in.N) throw DomainError("N must be a positive integer");
    p.n_spins = *in.N;
  }

  const double g_crit = critical_coupling(1.0, p.omega_q);
  int selectors = 0;
  auto from_G = [&](double G, const char* name) {
    p.G = G;
    p.offset = offset_for_coupling(G, g_crit);
    p.mu = (g_crit / G) * (g_crit / G);
    p.selector = name;
    ++selectors;
  };
  auto from_offset = [&](double offset, const char* name) {
    p.offset = offset;
    p.mu = mu_from_offset(offset);
    p.G = g_crit * std::pow(1.0 + offset, 0.25);
    p.selector = name;
    ++selectors;
  };

  if (in.mu) {
    const double mu = require_positive(in.mu, "mu");
    from_offset(branch_offset(mu), "mu");
    p.mu = mu;
    p.G = g_crit / std::sqrt(mu);
  }
  if (in.G) from_G(norm(require_positive(in.G, "G")), "G");
  if (in.N && in.g) from_G(*p.g_single * std::sqrt(*p.n_spins), "g,N");
  if (in.omega_minus)
    from_offset(offset_for_omega_minus(1.0, p.omega_q, norm(require_positive(in.omega_minus, "omega_minus"))),
                "omega_minus");
  if (in.omega_m_over_omega_minus) {
    const double r = require_positive(in.omega_m_over_omega_minus, "omega_m / omega_minus");
    if (!(r > 1.0)) throw DomainError("omega_m / omega_minus must exceed 1 on the superradiant branch");
    from_offset(offset_for_omega_minus(1.0, p.omega_q, 1.0 / r), "omega_m_over_omega_minus");
  }
  if (in.N && !in.g && !in.G) throw ConfigurationError("N given without g");
  if (selectors > 1)
    throw ConfigurationError("coupling over-specified: give one of mu, G, (g and N), omega_minus, "
                             "omega_m_over_omega_minus");
  return p;
}

}  // namespace critmech::cli
