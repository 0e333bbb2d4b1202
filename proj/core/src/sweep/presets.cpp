#include "critmech/sweep/presets.hpp"

#include <cmath>

#include "critmech/errors.hpp"

namespace critmech::sweep {

namespace {

void require_ratio(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw DomainError("omega_q / omega_m ratio must be positive");
}

std::vector<SweepResult> run_all(const std::vector<SweepSpec>& specs) {
  std::vector<SweepResult> out;
  out.reserve(specs.size());
  for (const auto& spec : specs) out.push_back(run_sweep(spec));
  return out;
}

}  // namespace

std::string block_suffix(std::size_t index) { return std::string(1, static_cast<char>('a' + index)); }

std::vector<SweepSpec> fig2_specs(double ratio, bool oracle_check) {
  require_ratio(ratio);
  const double gc = critical_coupling(1.0, ratio);

  SweepSpec a;
  a.name = "fig2_a";
  a.axes = {linear_axis("G_over_omega_m", 0.5 * gc, 2.0 * gc, 151)};
  a.fixed = {{"omega_m", 1.0}, {"omega_q_over_omega_m", ratio}};
  a.outputs = {"mu", "omega_minus_sq_over_omega_m_sq", "omega_minus_over_omega_m", "omega_plus_over_omega_m"};
  a.oracle_check = oracle_check;

  SweepSpec b = a;
  b.name = "fig2_b";
  b.axes = {linear_axis("mu", 0.2, 1.8, 81)};
  b.outputs = {"G_over_omega_m", "omega_minus_sq_over_omega_m_sq", "omega_minus_over_omega_m",
               "omega_plus_over_omega_m"};
  return {a, b};
}

std::vector<SweepSpec> fig3_specs(double ratio, bool oracle_check) {
  require_ratio(ratio);
  SweepSpec a;
  a.name = "fig3_a";
  a.axes = {log_axis("omega_m_over_omega_minus", 1e2, 1e6, 41)};
  a.fixed = {{"omega_m", 1.0}, {"omega_q_over_omega_m", ratio}, {"g0", 1.0}};
  a.outputs = {"mu", "omega_minus_over_omega_m", "g_minus_over_g0", "g_plus_over_g0", "coop_ratio", "chi"};
  a.oracle_check = oracle_check;

  SweepSpec b = a;
  b.name = "fig3_b";
  b.axes = {linear_axis("Gc_minus_G_over_omega_m", 0.0, 0.5, 51)};
  return {a, b};
}

std::vector<SweepResult> fig2_dataset(double ratio, bool oracle_check) {
  return run_all(fig2_specs(ratio, oracle_check));
}

std::vector<SweepResult> fig3_dataset(double ratio, bool oracle_check) {
  return run_all(fig3_specs(ratio, oracle_check));
}

}  // namespace critmech::sweep
