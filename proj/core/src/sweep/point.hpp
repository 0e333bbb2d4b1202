#pragma once

// Single-row evaluation shared by run_sweep and the CLI point commands.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "critmech/errors.hpp"
#include "critmech/sweep/sweep.hpp"

namespace critmech::sweep::detail {

// The requested coupling selector has no point on the superradiant branch
// (e.g. omega_m / omega_minus <= 1).
class OutOfBranch : public DomainError {
 public:
  using DomainError::DomainError;
};

struct ResolvedPoint {
  double omega_m = 1.0;
  double omega_q = 1.0;
  double g0 = 1.0;
  double omega_a = 0.0;
  double mu = 1.0;      // > 1 in the normal phase
  double offset = 0.0;  // 1/mu^2 - 1, formed without cancellation; < 0 in the normal phase
};

struct PointOutcome {
  std::map<std::string, std::optional<double>> values;
  bool stable = false;
  bool valid = true;
  std::string reason;
};

// Throws critmech::Error (DomainError / PhaseError) when the parameters
// do not define a point.
ResolvedPoint resolve_point(const std::map<std::string, double>& params);

PointOutcome evaluate_point(const std::map<std::string, double>& params, const std::vector<std::string>& outputs,
                            bool oracle_check, double omega_floor);

}  // namespace critmech::sweep::detail
