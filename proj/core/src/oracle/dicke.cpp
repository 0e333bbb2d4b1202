#include "critmech/oracle/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "critmech/errors.hpp"
#include "critmech/oracle/eigensolve.hpp"

namespace critmech::oracle {

namespace {

void require_dicke_space(const TruncatedSpace& space) {
  if (!space.has_spin()) throw ConfigurationError("Dicke Hamiltonian needs a spin sector");
  if (space.mode_count() != 1) throw ConfigurationError("Dicke Hamiltonian needs exactly one boson mode");
}

void require_two_modes(const TruncatedSpace& space) {
  if (space.mode_count() != 2 || space.has_spin())
    throw ConfigurationError("expected a two-mode boson space without spin");
}

// Visits every nonzero matrix element (row, col, value) of the Dicke
// Hamiltonian; each off-diagonal pair is visited in both orders.
template <typename Fn>
void for_each_dicke_element(const TruncatedSpace& space, const DickeCoupling& c, Fn&& emit) {
  const int two_j = *space.two_j();
  const double j = 0.5 * two_j;
  const int n_max = space.boson_cutoffs()[0];
  const double lambda = c.G / std::sqrt(static_cast<double>(two_j));
  const std::size_t sd = space.spin_dimension();

  for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
    const int n = static_cast<int>(idx / sd);
    const int s = static_cast<int>(idx % sd);
    const double m = s - j;
    emit(idx, idx, c.omega_m * n + c.omega_q * m);
    if (lambda == 0.0) continue;

    const double jp = s < two_j ? std::sqrt(j * (j + 1) - m * (m + 1)) : 0.0;
    const double jm = s > 0 ? std::sqrt(j * (j + 1) - m * (m - 1)) : 0.0;
    for (int dn : {-1, +1}) {
      const int n2 = n + dn;
      if (n2 < 0 || n2 > n_max) continue;
      const double boson = std::sqrt(static_cast<double>(std::max(n, n2)));
      if (jp != 0.0) emit(static_cast<std::size_t>(n2) * sd + s + 1, idx, lambda * boson * jp);
      if (jm != 0.0) emit(static_cast<std::size_t>(n2) * sd + s - 1, idx, lambda * boson * jm);
    }
  }
}

double sector_jz_over_j(const TruncatedSpace& space, const SectorHamiltonian& sector,
                        const Eigen::VectorXcd& ground) {
  const double j = space.spin_j();
  const std::size_t sd = space.spin_dimension();
  double acc = 0.0;
  for (std::size_t k = 0; k < sector.basis.size(); ++k) {
    const double m = static_cast<double>(sector.basis[k] % sd) - j;
    acc += std::norm(ground(static_cast<Eigen::Index>(k))) * m;
  }
  return acc / j;
}

}  // namespace

OperatorMatrix dicke_hamiltonian(const TruncatedSpace& space, const DickeCoupling& coupling) {
  require_dicke_space(space);
  auto h = OperatorMatrix::zero(space.dimension());
  auto& e = h.entries();
  for_each_dicke_element(space, coupling, [&e](std::size_t r, std::size_t c, double v) {
    e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += v;
  });
  return h;
}

SectorHamiltonian dicke_parity_sector(const TruncatedSpace& space, const DickeCoupling& coupling, int parity) {
  require_dicke_space(space);
  if (parity != 1 && parity != -1) throw DomainError("parity must be +1 or -1");

  SectorHamiltonian out;
  out.parity = parity;
  constexpr auto kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> position(space.dimension(), kAbsent);
  for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
    if (space.parity_of(idx) == parity) {
      position[idx] = out.basis.size();
      out.basis.push_back(idx);
    }
  }

  out.hamiltonian = OperatorMatrix::zero(out.basis.size());
  auto& e = out.hamiltonian.entries();
  for_each_dicke_element(space, coupling, [&](std::size_t r, std::size_t c, double v) {
    if (position[c] == kAbsent) return;
    // The Hamiltonian commutes with parity, so r lies in the same sector.
    e(static_cast<Eigen::Index>(position[r]), static_cast<Eigen::Index>(position[c])) += v;
  });
  return out;
}

OperatorMatrix holstein_primakoff_hamiltonian(const TruncatedSpace& space, const DickeCoupling& coupling,
                                              int n_spins, HpDivisor divisor) {
  require_two_modes(space);
  if (n_spins < 1) throw DomainError("N must be positive");
  const double n = static_cast<double>(n_spins);
  const double d = divisor == HpDivisor::SpinCount ? n : 2.0 * n;
  const auto xi = [d](int occupation) { return std::sqrt(std::max(0.0, 1.0 - occupation / d)); };

  const int nb_max = space.boson_cutoffs()[0];
  const int nc_max = space.boson_cutoffs()[1];
  auto h = OperatorMatrix::zero(space.dimension());
  auto& e = h.entries();

  for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
    const BasisState st = space.state_at(idx);
    const int nb = st.occupations[0];
    const int nc = st.occupations[1];
    const auto col = static_cast<Eigen::Index>(idx);
    e(col, col) += coupling.omega_m * nb + coupling.omega_q * (nc - 0.5 * n);

    for (int db : {-1, +1}) {
      const int nb2 = nb + db;
      if (nb2 < 0 || nb2 > nb_max) continue;
      const double boson = std::sqrt(static_cast<double>(std::max(nb, nb2)));
      // c^dag xi |nc> = xi(nc) sqrt(nc + 1) |nc + 1>
      if (nc < nc_max) {
        const auto row = static_cast<Eigen::Index>(space.index_of({{nb2, nc + 1}, 0}));
        e(row, col) += coupling.G * boson * xi(nc) * std::sqrt(nc + 1.0);
      }
      // xi c |nc> = xi(nc - 1) sqrt(nc) |nc - 1>
      if (nc > 0) {
        const auto row = static_cast<Eigen::Index>(space.index_of({{nb2, nc - 1}, 0}));
        e(row, col) += coupling.G * boson * xi(nc - 1) * std::sqrt(static_cast<double>(nc));
      }
    }
  }
  return h;
}

OperatorMatrix quadratic_hamiltonian(const TruncatedSpace& space, const QuadraticModel& model) {
  require_two_modes(space);
  const int nb_max = space.boson_cutoffs()[0];
  const int nc_max = space.boson_cutoffs()[1];
  auto h = OperatorMatrix::zero(space.dimension());
  auto& e = h.entries();

  for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
    const BasisState st = space.state_at(idx);
    const int nb = st.occupations[0];
    const int nc = st.occupations[1];
    const auto col = static_cast<Eigen::Index>(idx);
    e(col, col) += model.omega_m * nb + model.Omega_q * nc + model.eta * (2.0 * nc + 1.0);

    // eta (c + c^dag)^2 couples nc <-> nc +- 2
    for (int dc : {-2, +2}) {
      const int nc2 = nc + dc;
      if (nc2 < 0 || nc2 > nc_max) continue;
      const int hi = std::max(nc, nc2);
      const auto row = static_cast<Eigen::Index>(space.index_of({{nb, nc2}, 0}));
      e(row, col) += model.eta * std::sqrt(static_cast<double>(hi) * (hi - 1));
    }
    for (int db : {-1, +1}) {
      const int nb2 = nb + db;
      if (nb2 < 0 || nb2 > nb_max) continue;
      const double boson = std::sqrt(static_cast<double>(std::max(nb, nb2)));
      for (int dc : {-1, +1}) {
        const int nc2 = nc + dc;
        if (nc2 < 0 || nc2 > nc_max) continue;
        const double spin_mode = std::sqrt(static_cast<double>(std::max(nc, nc2)));
        const auto row = static_cast<Eigen::Index>(space.index_of({{nb2, nc2}, 0}));
        e(row, col) += model.G_eff * boson * spin_mode;
      }
    }
  }
  return h;
}

DickeGroundState dicke_ground_state(const TruncatedSpace& space, const DickeCoupling& coupling) {
  require_dicke_space(space);
  const SectorHamiltonian even = dicke_parity_sector(space, coupling, +1);
  const SectorHamiltonian odd = dicke_parity_sector(space, coupling, -1);

  EigensolveOptions opts;
  opts.check_residuals = false;
  const SpectrumResult even_spec = hermitian_eigensolve(even.hamiltonian, opts);
  const SpectrumResult odd_spec = hermitian_eigensolve(odd.hamiltonian, opts);

  const bool even_lower = even_spec.eigenvalues(0) <= odd_spec.eigenvalues(0);
  const SectorHamiltonian& gs_sector = even_lower ? even : odd;
  const SpectrumResult& gs = even_lower ? even_spec : odd_spec;
  const SpectrumResult& other = even_lower ? odd_spec : even_spec;
  if (gs.eigenvalues.size() < 2) throw ConfigurationError("parity sector too small for a gap");

  DickeGroundState out;
  out.energy = gs.eigenvalues(0);
  out.parity = gs_sector.parity;
  out.jz_over_j = sector_jz_over_j(space, gs_sector, gs.eigenvectors.col(0));
  out.sector_gap = gs.eigenvalues(1) - gs.eigenvalues(0);
  out.full_gap = std::min(gs.eigenvalues(1), other.eigenvalues(0)) - gs.eigenvalues(0);
  return out;
}

}  // namespace critmech::oracle
