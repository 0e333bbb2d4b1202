#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "critmech/criticality.hpp"

namespace critmech {

// Internally every frequency and coupling is a plain double measured in
// units of the phonon frequency omega_m. This header is the only place
// where physical units appear.
enum class FrequencyUnit {
  OmegaM,        // already dimensionless (multiples of omega_m)
  Hertz,         // cyclic frequency f; angular value is 2*pi*f
  RadPerSecond,  // angular frequency
};

FrequencyUnit parse_frequency_unit(std::string_view tag);
std::string_view to_string(FrequencyUnit unit);

struct Frequency {
  double value = 0.0;
  FrequencyUnit unit = FrequencyUnit::OmegaM;
};

// Angular frequency in rad/s. Throws ConfigurationError for OmegaM values,
// which have no absolute scale.
double to_rad_per_second(const Frequency& f);

// Expresses f in units of omega_m, where omega_m itself is given in rad/s.
double to_omega_m_units(const Frequency& f, double omega_m_rad_per_second);

// Raw inputs with explicit unit tags. Mixing units between fields is
// allowed; everything is normalized against omega_m.
struct PhysicalParams {
  Frequency omega_m;
  Frequency omega_q;
  std::optional<Frequency> g_single;
  std::optional<std::uint64_t> n_spins;
  std::optional<Frequency> g_collective;
  Frequency g0{0.0, FrequencyUnit::OmegaM};
  Frequency omega_a{0.0, FrequencyUnit::OmegaM};
};

// Returns params with omega_m == 1 and every other frequency divided by
// omega_m. If omega_m is tagged OmegaM, all other fields must be too.
SystemParams normalize(const PhysicalParams& physical);

// Named physical-unit profile for the NV-ensemble/nanobeam estimate:
// omega_minus = 2*pi x 10 Hz, omega_m = 1e6 omega_minus (2*pi x 10 MHz),
// omega_q = 10 omega_m and single-spin coupling g = 2*pi x 16 Hz.
struct EstimateProfile {
  std::string name;
  Frequency omega_m;
  Frequency omega_q;
  Frequency omega_minus;
  Frequency g_single;
};

EstimateProfile nv_nanobeam_profile();
std::optional<EstimateProfile> find_profile(std::string_view name);

}  // namespace critmech
