#pragma once

#include <vector>

#include <Eigen/Dense>

namespace critmech::oracle {

// Exact spectrum of the photon-number-n sector of
//   omega_a a^dag a + omega_minus d^dag d + g_minus a^dag a (d + d^dag)
// i.e. omega_a n + omega_minus d^dag d + g_minus n (d + d^dag) on d-Fock
// states 0..n_max. The result is checked against a run at 2 n_max:
// TruncationError when the lowest level moves by more than
// convergence_tolerance (relative to max(|E_0|, omega_minus)).
struct SectorSpectrum {
  int n_photon = 0;
  int n_max = 0;
  Eigen::VectorXd energies;  // ascending
  double doubling_shift = 0.0;
};

SectorSpectrum optomech_sector_spectrum(int n_photon, double omega_a, double omega_minus, double g_minus,
                                        int n_max, double convergence_tolerance = 1e-8);

// Least-squares fit E(n) = e0 + omega_a n - chi n^2 to the lowest sector
// energies for n = 0 .. ground_energies.size()-1.
struct KerrFit {
  double offset = 0.0;
  double omega_a = 0.0;
  double chi = 0.0;
  double max_residual = 0.0;
};

KerrFit fit_kerr(const std::vector<double>& ground_energies);

}  // namespace critmech::oracle
