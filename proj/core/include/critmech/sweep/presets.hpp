#pragma once

// Figure datasets. Each preset is a list of blocks; every block is an
// ordinary SweepSpec so it can be edited and re-run.
//
// fig2 (omega_q / omega_m = ratio, default 4)
//   a: G_over_omega_m linear over [G_c/2, 2 G_c], 151 points (G_c at index 50)
//   b: mu linear over [0.2, 1.8], 81 points (mu = 1 at index 40)
//   outputs mu / G_over_omega_m, omega_minus_sq_over_omega_m_sq (signed,
//   continued through the CP), omega_minus_over_omega_m, omega_plus_over_omega_m.
//
// fig3 (ratio, default 10)
//   a: omega_m_over_omega_minus log over [1e2, 1e6], 41 points
//   b: Gc_minus_G_over_omega_m linear over [0, 0.5], 51 points; the first
//      row sits on the CP and is invalid (cp_divergence)
//   outputs mu, omega_minus_over_omega_m, g_minus_over_g0, g_plus_over_g0,
//   coop_ratio, chi (g0 = 1).

#include <string>
#include <vector>

#include "critmech/sweep/sweep.hpp"

namespace critmech::sweep {

std::vector<SweepSpec> fig2_specs(double ratio = 4.0, bool oracle_check = true);
std::vector<SweepSpec> fig3_specs(double ratio = 10.0, bool oracle_check = true);

std::vector<SweepResult> fig2_dataset(double ratio = 4.0, bool oracle_check = true);
std::vector<SweepResult> fig3_dataset(double ratio = 10.0, bool oracle_check = true);

// Suffix of block i: "a", "b", ...
std::string block_suffix(std::size_t index);

}  // namespace critmech::sweep
