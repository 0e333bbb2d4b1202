#pragma once

// JSON record layout for the analytic types. Field names match the struct
// members; numbers are IEEE-754 doubles. Optional fields are omitted when
// absent (PolaritonSpectrum::omega_minus is written as null when unstable).

#include <nlohmann/json.hpp>

#include "critmech/criticality.hpp"

namespace critmech {

void to_json(nlohmann::json& j, const SystemParams& p);
void from_json(const nlohmann::json& j, SystemParams& p);

void to_json(nlohmann::json& j, const CriticalFrame& f);
void from_json(const nlohmann::json& j, CriticalFrame& f);

void to_json(nlohmann::json& j, const QuadraticModel& m);
void from_json(const nlohmann::json& j, QuadraticModel& m);

void to_json(nlohmann::json& j, const PolaritonSpectrum& s);
void from_json(const nlohmann::json& j, PolaritonSpectrum& s);

void to_json(nlohmann::json& j, const CouplingReport& r);
void from_json(const nlohmann::json& j, CouplingReport& r);

}  // namespace critmech
