#include "critmech/units.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "critmech/errors.hpp"

namespace critmech {

FrequencyUnit parse_frequency_unit(std::string_view tag) {
  if (tag == "omega_m" || tag == "omega-m" || tag == "ratio") return FrequencyUnit::OmegaM;
  if (tag == "hz" || tag == "Hz") return FrequencyUnit::Hertz;
  if (tag == "rad/s" || tag == "rad_per_s") return FrequencyUnit::RadPerSecond;
  throw ConfigurationError("unknown frequency unit '" + std::string(tag) + "' (omega_m, hz, rad/s)");
}

std::string_view to_string(FrequencyUnit unit) {
  switch (unit) {
    case FrequencyUnit::OmegaM: return "omega_m";
    case FrequencyUnit::Hertz: return "hz";
    case FrequencyUnit::RadPerSecond: return "rad/s";
  }
  return "unknown";
}

double to_rad_per_second(const Frequency& f) {
  switch (f.unit) {
    case FrequencyUnit::Hertz: return 2.0 * std::numbers::pi * f.value;
    case FrequencyUnit::RadPerSecond: return f.value;
    case FrequencyUnit::OmegaM: break;
  }
  throw ConfigurationError("a value in omega_m units has no absolute scale");
}

double to_omega_m_units(const Frequency& f, double omega_m_rad_per_second) {
  if (f.unit == FrequencyUnit::OmegaM) return f.value;
  if (!(omega_m_rad_per_second > 0.0)) throw DomainError("omega_m must be positive");
  return to_rad_per_second(f) / omega_m_rad_per_second;
}

SystemParams normalize(const PhysicalParams& physical) {
  SystemParams out;
  out.n_spins = physical.n_spins;

  if (physical.omega_m.unit == FrequencyUnit::OmegaM) {
    // Already dimensionless: only a pure rescale is possible, and only if
    // nothing carries an absolute unit.
    auto check = [](const Frequency& f) {
      if (f.unit != FrequencyUnit::OmegaM)
        throw ConfigurationError("omega_m given without a unit while other inputs carry one");
    };
    check(physical.omega_q);
    check(physical.g0);
    check(physical.omega_a);
    if (physical.g_single) check(*physical.g_single);
    if (physical.g_collective) check(*physical.g_collective);

    const double scale = physical.omega_m.value;
    if (!(scale > 0.0)) throw DomainError("omega_m must be positive");
    out.omega_m = 1.0;
    out.omega_q = physical.omega_q.value / scale;
    out.g0 = physical.g0.value / scale;
    out.omega_a = physical.omega_a.value / scale;
    if (physical.g_single) out.g_single = physical.g_single->value / scale;
    if (physical.g_collective) out.g_collective = physical.g_collective->value / scale;
    return out;
  }

  const double wm = to_rad_per_second(physical.omega_m);
  if (!(wm > 0.0)) throw DomainError("omega_m must be positive");
  auto conv = [wm](const Frequency& f) {
    if (f.unit == FrequencyUnit::OmegaM) return f.value;
    return to_rad_per_second(f) / wm;
  };
  out.omega_m = 1.0;
  out.omega_q = conv(physical.omega_q);
  out.g0 = conv(physical.g0);
  out.omega_a = conv(physical.omega_a);
  if (physical.g_single) out.g_single = conv(*physical.g_single);
  if (physical.g_collective) out.g_collective = conv(*physical.g_collective);
  return out;
}

EstimateProfile nv_nanobeam_profile() {
  EstimateProfile p;
  p.name = "nv-nanobeam";
  p.omega_minus = {10.0, FrequencyUnit::Hertz};
  p.omega_m = {1e7, FrequencyUnit::Hertz};
  p.omega_q = {1e8, FrequencyUnit::Hertz};
  p.g_single = {16.0, FrequencyUnit::Hertz};
  return p;
}

std::optional<EstimateProfile> find_profile(std::string_view name) {
  if (name == "nv-nanobeam") return nv_nanobeam_profile();
  return std::nullopt;
}

}  // namespace critmech
