#include "critmech/sweep/convergence.hpp"

#include <cmath>

#include "critmech/errors.hpp"
#include "critmech/oracle/dicke.hpp"

namespace critmech::sweep {

SweepResult dicke_convergence_study(double omega_m, double omega_q, double G, const std::vector<int>& n_list,
                                    int n_max, std::size_t dimension_cap) {
  if (n_list.empty()) throw DomainError("N list is empty");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1) throw DomainError("N must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw DomainError("N list must be strictly ascending");
  }
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (!(G >= 0.0)) throw DomainError("G must be non-negative");
  const double g_crit = critical_coupling(omega_m, omega_q);

  // Fail on the cap before doing any diagonalization.
  for (int n : n_list) oracle::build_space({n_max}, n, dimension_cap);

  const bool superradiant = classify_phase(G, g_crit) == Phase::Superradiant;
  double jz_target = -1.0;
  double gap_target = 0.0;
  if (superradiant) {
    const double mu = critical_parameter(G, g_crit);
    jz_target = -mu;
    gap_target = polariton_frequencies(omega_m, omega_q, mu).omega_minus.value_or(0.0);
  } else {
    // Normal phase: undisplaced modes, i.e. the mu = 1 form of the spectrum.
    gap_target = polariton_frequencies(omega_m, omega_q, G, 1.0).omega_minus.value_or(0.0);
  }

  SweepResult result;
  result.spec.name = "dicke_convergence";
  std::vector<double> ns(n_list.begin(), n_list.end());
  result.spec.axes = {list_axis("N", ns)};
  result.spec.fixed = {{"omega_m", omega_m}, {"omega_q", omega_q}, {"G", G}, {"n_max", static_cast<double>(n_max)}};
  result.spec.outputs = {"dimension",  "ground_energy_per_N", "jz_over_j", "excitation_gap",
                         "ground_doublet_splitting", "jz_target", "gap_target"};
  result.spec.workers = 1;
  result.provenance = {tool_version(), utc_timestamp()};
  result.columns = {"N"};
  result.columns.insert(result.columns.end(), result.spec.outputs.begin(), result.spec.outputs.end());

  const oracle::DickeCoupling coupling{omega_m, omega_q, G};
  for (int n : n_list) {
    const auto space = oracle::build_space({n_max}, n, dimension_cap);
    const auto gs = oracle::dicke_ground_state(space, coupling);
    SweepRow row;
    row.values = {static_cast<double>(n),
                  static_cast<double>(space.dimension()),
                  gs.energy / n,
                  gs.jz_over_j,
                  superradiant ? gs.sector_gap : gs.full_gap,
                  superradiant ? gs.full_gap : 0.0,
                  jz_target,
                  gap_target};
    row.stable = true;
    row.valid = true;
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace critmech::sweep
