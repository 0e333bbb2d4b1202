#pragma once

#include <cstddef>
#include <vector>

#include "critmech/oracle/space.hpp"
#include "critmech/sweep/sweep.hpp"

namespace critmech::sweep {

// Finite-N exact diagonalization of the spin/phonon Hamiltonian (spin
// j = N/2, phonon Fock cutoff n_max) against the thermodynamic limit.
// Columns: N, dimension, ground_energy_per_N, jz_over_j, excitation_gap,
// ground_doublet_splitting, jz_target, gap_target.
//
// In the superradiant phase excitation_gap is the in-parity-sector gap and
// the targets are -mu and omega_minus; in the normal phase the gap is
// E_1 - E_0 and the targets are -1 and the lower normal-mode frequency.
// ResourceError (before any work) if some N exceeds the dimension cap.
SweepResult dicke_convergence_study(double omega_m, double omega_q, double G, const std::vector<int>& n_list,
                                    int n_max, std::size_t dimension_cap = oracle::kDefaultDimensionCap);

}  // namespace critmech::sweep
