#include "critmech/oracle/sector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "critmech/errors.hpp"

namespace critmech::oracle {

namespace {

Eigen::VectorXd sector_levels(int n_photon, double omega_a, double omega_minus, double g_minus, int n_max) {
  const Eigen::Index dim = n_max + 1;
  const double drive = g_minus * n_photon;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    h(m, m) = omega_a * n_photon + omega_minus * static_cast<double>(m);
    if (m + 1 < dim) {
      h(m, m + 1) = drive * std::sqrt(static_cast<double>(m + 1));
      h(m + 1, m) = h(m, m + 1);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ContractError("sector eigensolve did not converge");
  return solver.eigenvalues();
}

}  // namespace

SectorSpectrum optomech_sector_spectrum(int n_photon, double omega_a, double omega_minus, double g_minus,
                                        int n_max, double convergence_tolerance) {
  if (n_photon < 0) throw DomainError("photon number must be non-negative");
  if (!(omega_minus > 0.0)) throw DomainError("omega_minus must be positive");
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (!std::isfinite(omega_a) || !std::isfinite(g_minus)) throw DomainError("non-finite parameters");

  SectorSpectrum out;
  out.n_photon = n_photon;
  out.n_max = n_max;
  out.energies = sector_levels(n_photon, omega_a, omega_minus, g_minus, n_max);
  const Eigen::VectorXd refined = sector_levels(n_photon, omega_a, omega_minus, g_minus, 2 * n_max);
  out.doubling_shift = std::abs(refined(0) - out.energies(0));
  const double scale = std::max(std::abs(out.energies(0)), omega_minus);
  if (out.doubling_shift > convergence_tolerance * scale)
    throw TruncationError("sector n = " + std::to_string(n_photon) + " not converged at n_max = " +
                          std::to_string(n_max) + " (shift " + std::to_string(out.doubling_shift) + ")");
  return out;
}

KerrFit fit_kerr(const std::vector<double>& ground_energies) {
  if (ground_energies.size() < 3) throw DomainError("Kerr fit needs at least three sectors");
  const auto rows = static_cast<Eigen::Index>(ground_energies.size());
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index n = 0; n < rows; ++n) {
    const double x = static_cast<double>(n);
    design(n, 0) = 1.0;
    design(n, 1) = x;
    design(n, 2) = -x * x;
    rhs(n) = ground_energies[static_cast<std::size_t>(n)];
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(rhs);
  KerrFit fit;
  fit.offset = coef(0);
  fit.omega_a = coef(1);
  fit.chi = coef(2);
  fit.max_residual = (design * coef - rhs).cwiseAbs().maxCoeff();
  return fit;
}

}  // namespace critmech::oracle
