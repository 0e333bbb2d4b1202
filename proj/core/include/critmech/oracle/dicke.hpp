#pragma once

#include <cstddef>
#include <vector>

#include "critmech/criticality.hpp"
#include "critmech/oracle/operator_matrix.hpp"
#include "critmech/oracle/space.hpp"

namespace critmech::oracle {

struct DickeCoupling {
  double omega_m = 1.0;
  double omega_q = 1.0;
  double G = 0.0;  // collective coupling g sqrt(N)
};

// Finite-N ensemble/phonon Hamiltonian on one boson mode plus a spin j = N/2:
//
//   H = omega_m b^dag b + omega_q J_z + (G / sqrt(N)) (b + b^dag)(J_+ + J_-)
//
// which becomes omega_m b^dag b + omega_q c^dag c + G (b + b^dag)(xi c + c^dag xi)
// under Holstein-Primakoff and has its critical point at
// G_c = sqrt(omega_m omega_q) / 2. ConfigurationError if the space lacks
// the spin or does not have exactly one boson mode.
OperatorMatrix dicke_hamiltonian(const TruncatedSpace& space, const DickeCoupling& coupling);

// Restriction of dicke_hamiltonian to one parity sector (+1 or -1). `basis`
// lists the full-space indices of the sector, in order.
struct SectorHamiltonian {
  int parity = 1;
  std::vector<std::size_t> basis;
  OperatorMatrix hamiltonian;
};

SectorHamiltonian dicke_parity_sector(const TruncatedSpace& space, const DickeCoupling& coupling, int parity);

// Which divisor appears in xi = sqrt(1 - c^dag c / D).
enum class HpDivisor {
  SpinCount,       // D = N = 2j, the exact mapping for N two-level spins
  TwiceSpinCount,  // D = 2N
};

// Bosonized form on two modes (b, c):
//   omega_m b^dag b + omega_q (c^dag c - N/2) + G (b + b^dag)(xi c + c^dag xi).
// With HpDivisor::SpinCount and a c-cutoff of N its spectrum equals that
// of dicke_hamiltonian. Terms where 1 - n_c / D < 0 are clamped to zero.
OperatorMatrix holstein_primakoff_hamiltonian(const TruncatedSpace& space, const DickeCoupling& coupling,
                                              int n_spins, HpDivisor divisor = HpDivisor::SpinCount);

// omega_m b^dag b + Omega_q c^dag c + G_eff (b + b^dag)(c + c^dag) + eta (c + c^dag)^2
// on two boson modes. Linear drive terms (E_b, E_c) are ignored. The
// constant eta from normal ordering (c + c^dag)^2 is kept, so compare gaps,
// not absolute energies.
OperatorMatrix quadratic_hamiltonian(const TruncatedSpace& space, const QuadraticModel& model);

// Ground-state summary from parity-resolved diagonalization.
struct DickeGroundState {
  double energy = 0.0;
  int parity = 1;
  double jz_over_j = 0.0;
  // Lowest excitation inside the ground-state parity sector. In the
  // superradiant phase the opposite-parity partner is quasi-degenerate, so
  // this is the gap that tracks omega_minus.
  double sector_gap = 0.0;
  // E_1 - E_0 across both sectors (ground-doublet splitting when
  // superradiant, the single-quantum gap when normal).
  double full_gap = 0.0;
};

DickeGroundState dicke_ground_state(const TruncatedSpace& space, const DickeCoupling& coupling);

}  // namespace critmech::oracle
