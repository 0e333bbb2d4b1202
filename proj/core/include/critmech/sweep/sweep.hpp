#pragma once

// Deterministic 1-D / 2-D parameter sweeps over the analytic pipeline.
//
// Parameters understood on axes and in `fixed`:
//   omega_m (default 1), omega_q or omega_q_over_omega_m (one required),
//   g0 (default 1), omega_a (default 0), and exactly one coupling selector:
//     G                          collective coupling
//     G_over_omega_m
//     mu                         G_c^2 / G^2; mu > 1 is the normal phase
//     omega_m_over_omega_minus   lower-polariton ratio on the superradiant branch
//     Gc_minus_G_over_omega_m    distance from the CP, mirrored onto the
//                                superradiant branch: G = G_c + |x| omega_m
//
// Outputs: omega_minus, omega_plus, omega_minus_over_omega_m,
// omega_plus_over_omega_m, omega_minus_sq_over_omega_m_sq (continued through
// the CP), theta, mu, G_over_omega_m, g_minus_over_g0, g_plus_over_g0, chi,
// coop_ratio.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "critmech/criticality.hpp"

namespace critmech::sweep {

enum class Spacing { Linear, Log };

struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
  Spacing spacing = Spacing::Linear;
  // When non-empty these are used verbatim and start/stop/count are ignored.
  std::vector<double> explicit_values;

  // Grid points; the last equals stop exactly.
  std::vector<double> values() const;
  std::size_t size() const;

  bool operator==(const Axis&) const = default;
};

Axis linear_axis(std::string name, double start, double stop, int count);
Axis log_axis(std::string name, double start, double stop, int count);
Axis list_axis(std::string name, std::vector<double> values);

struct SweepSpec {
  std::string name;
  std::vector<Axis> axes;
  std::map<std::string, double> fixed;
  std::vector<std::string> outputs;
  bool oracle_check = false;
  double omega_floor = kDefaultOmegaFloor;
  int workers = 0;  // 0: OpenMP default

  // SweepError on: 0 or >2 axes, count < 2, log axis through zero, unknown
  // names, duplicate parameters, missing omega_q or coupling selector.
  void validate() const;

  bool operator==(const SweepSpec&) const = default;
};

struct SweepRow {
  std::vector<std::optional<double>> values;  // aligned with SweepResult::columns
  bool stable = false;
  bool valid = false;
  std::string reason;  // empty when valid

  bool operator==(const SweepRow&) const = default;
};

struct Provenance {
  std::string tool_version;
  std::string timestamp;  // ISO-8601 UTC

  bool operator==(const Provenance&) const = default;
};

// Invalid-row reasons.
inline constexpr const char* kReasonNormalPhase = "normal_phase";
inline constexpr const char* kReasonCpDivergence = "cp_divergence";
inline constexpr const char* kReasonOutOfBranch = "out_of_branch";
inline constexpr const char* kReasonInvalidInput = "invalid_input";

// Oracle columns appended when oracle_check is set.
inline constexpr const char* kOracleOmegaMinus = "omega_minus_oracle";
inline constexpr const char* kOracleOmegaPlus = "omega_plus_oracle";
inline constexpr const char* kOracleGMinus = "g_minus_over_g0_oracle";
inline constexpr const char* kOracleGPlus = "g_plus_over_g0_oracle";
inline constexpr const char* kOracleDelta = "oracle_max_rel_delta";

struct SweepResult {
  SweepSpec spec;
  // Axis names, then outputs, then oracle columns. The per-row stable /
  // valid / reason flags are stored separately and exported after these.
  std::vector<std::string> columns;
  std::vector<SweepRow> rows;
  Provenance provenance;

  std::optional<std::size_t> column_index(const std::string& name) const;
  // Column values in row order (nullopt for empty cells). SweepError if the
  // column does not exist.
  std::vector<std::optional<double>> column(const std::string& name) const;
  std::size_t invalid_count() const;

  bool operator==(const SweepResult&) const = default;
};

const std::vector<std::string>& known_parameters();
const std::vector<std::string>& known_outputs();

// Rows in axis-major order (first axis outermost). SweepError when the
// spec is invalid or every row is invalid (message carries the first
// reason).
SweepResult run_sweep(const SweepSpec& spec);

std::string tool_version();
std::string utc_timestamp();

}  // namespace critmech::sweep
