#include "critmech/oracle/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "critmech/detail/frame_formulas.hpp"
#include "critmech/errors.hpp"

using ExtendedReal = boost::multiprecision::cpp_bin_float_quad;

// Boost 1.74's generic NumTraits for multiprecision numbers lacks the
// infinity()/quiet_NaN() members Eigen 3.4 uses in hypot; a full
// specialization for the one type used here fills them in.
namespace Eigen {
template <>
struct NumTraits<ExtendedReal> : GenericNumTraits<ExtendedReal> {
  using Real = ExtendedReal;
  using NonInteger = ExtendedReal;
  using Literal = double;
  using Nested = ExtendedReal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8,
  };
  static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static Real dummy_precision() { return 1000 * epsilon(); }
  static Real highest() { return (std::numeric_limits<Real>::max)(); }
  static Real lowest() { return std::numeric_limits<Real>::lowest(); }
  static Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static int digits10() { return std::numeric_limits<Real>::digits10; }
};
}  // namespace Eigen

namespace critmech::oracle {

namespace {

template <typename Real>
using MatrixT = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
struct FormT {
  std::vector<Real> w;
  MatrixT<Real> couplings;
  std::vector<Real> squeeze;
};

template <typename Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

template <typename Real>
SymplecticModes diagonalize(const FormT<Real>& form, const SymplecticOptions& options) {
  using std::abs;
  using std::sqrt;
  const auto n = static_cast<Eigen::Index>(form.w.size());
  if (n == 0) throw DomainError("quadratic form has no modes");
  for (const Real& w : form.w)
    if (!(w > Real(0))) throw DomainError("mode frequencies must be positive");

  // H = 1/2 p^T W p + 1/2 x^T A x with W = diag(w),
  // A_ii = w_i + 4 s_i, A_ij = 2 C_ij. Rescaling X = W^-1/2 x gives
  // H = 1/2 P^2 + 1/2 X^T V X with V = W^1/2 A W^1/2.
  MatrixT<Real> v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    v(i, i) = form.w[iu] * form.w[iu] + Real(4) * form.squeeze[iu] * form.w[iu];
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      v(i, j) = Real(2) * form.couplings(i, j) * sqrt(form.w[iu] * form.w[ju]);
      v(j, i) = v(i, j);
    }
  }

  Eigen::SelfAdjointEigenSolver<MatrixT<Real>> solver(v);
  if (solver.info() != Eigen::Success) throw ContractError("symplectic eigenproblem did not converge");
  const auto& lambda = solver.eigenvalues();
  const auto& rot = solver.eigenvectors();

  Real norm(0);
  for (Eigen::Index k = 0; k < n; ++k) norm = std::max<Real>(norm, abs(lambda(k)));
  const double eps_ratio = to_double(Real(std::numeric_limits<Real>::epsilon())) /
                           std::numeric_limits<double>::epsilon();
  const Real zero_tol = Real(options.zero_tolerance * eps_ratio) * norm;

  SymplecticModes out;
  out.stable = true;
  out.position_map = Eigen::MatrixXd::Zero(n, n);
  out.momentum_map = Eigen::MatrixXd::Zero(n, n);
  std::vector<Real> freq(static_cast<std::size_t>(n), Real(0));
  std::vector<bool> regular(static_cast<std::size_t>(n), false);

  for (Eigen::Index k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    Real l = lambda(k);
    if (abs(l) <= zero_tol) {
      if (!out.zero_mode) out.zero_mode = ku;
      l = Real(0);
    } else if (l < Real(0)) {
      out.stable = false;
    } else {
      freq[ku] = sqrt(l);
      regular[ku] = true;
    }
    out.squared_frequencies.push_back(to_double(l));
    out.frequencies.push_back(l < Real(0) ? std::numeric_limits<double>::quiet_NaN() : to_double(freq[ku]));
  }

  // x_i = sum_k O_ik sqrt(w_i / w_k) q_k,  p_i = sum_k O_ik sqrt(w_k / w_i) pi_k
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (!regular[ku]) continue;
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      out.position_map(i, k) = to_double(Real(rot(i, k) * sqrt(form.w[iu] / freq[ku])));
      out.momentum_map(i, k) = to_double(Real(rot(i, k) * sqrt(freq[ku] / form.w[iu])));
    }
  }

  if (std::all_of(regular.begin(), regular.end(), [](bool r) { return r; })) {
    const Eigen::MatrixXd check =
        out.position_map * out.momentum_map.transpose() - Eigen::MatrixXd::Identity(n, n);
    out.symplectic_error = check.cwiseAbs().maxCoeff();
  } else {
    out.symplectic_error = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

template <typename Real>
FormT<Real> frame_form(double omega_m, double omega_q, double offset) {
  using std::sqrt;
  const Real wm(omega_m);
  const Real wq(omega_q);
  const Real scale = sqrt(Real(1) + Real(offset));  // 1 / mu
  const Real m = Real(1) / scale;
  const Real g_crit = sqrt(wm * wq) / Real(2);
  const Real G = g_crit * sqrt(scale);
  // All coefficients are independent of N; N = 1 keeps the numbers O(1).
  const Real n_spins(1);
  const auto d = detail::stationary_displacements(wm, G, n_spins, m);
  const auto c = detail::displaced_frame_coefficients(wm, wq, G, n_spins, d.alpha_b, d.alpha_c);

  FormT<Real> f;
  f.w = {wm, c.Omega_q};
  f.couplings = MatrixT<Real>::Zero(2, 2);
  f.couplings(0, 1) = c.G_eff;
  f.squeeze = {Real(0), c.eta};
  return f;
}

}  // namespace

QuadraticForm quadratic_form(const QuadraticModel& model) {
  QuadraticForm f;
  f.mode_frequencies = {model.omega_m, model.Omega_q};
  f.xx_couplings = Eigen::MatrixXd::Zero(2, 2);
  f.xx_couplings(0, 1) = model.G_eff;
  f.xx_couplings(1, 0) = model.G_eff;
  f.squeeze_terms = {0.0, model.eta};
  return f;
}

SymplecticModes symplectic_diagonalize(const QuadraticForm& form, const SymplecticOptions& options) {
  const auto n = static_cast<Eigen::Index>(form.modes());
  if (form.xx_couplings.rows() != n || form.xx_couplings.cols() != n ||
      form.squeeze_terms.size() != form.modes())
    throw DomainError("quadratic form has inconsistent sizes");
  FormT<double> f{form.mode_frequencies, form.xx_couplings, form.squeeze_terms};
  return diagonalize(f, options);
}

SymplecticModes superradiant_frame_modes(double omega_m, double omega_q, double mu, Precision precision,
                                         const SymplecticOptions& options) {
  if (!(mu > 0.0 && mu <= 1.0)) throw PhaseError("mu outside (0, 1]: superradiant frame undefined");
  return superradiant_frame_modes_at_offset(omega_m, omega_q, branch_offset(mu), precision, options);
}

SymplecticModes superradiant_frame_modes_at_offset(double omega_m, double omega_q, double offset,
                                                   Precision precision, const SymplecticOptions& options) {
  if (!(omega_m > 0.0) || !(omega_q > 0.0)) throw DomainError("frequencies must be positive");
  if (!(offset >= 0.0) || !std::isfinite(offset)) throw PhaseError("negative branch offset: superradiant frame undefined");
  if (precision == Precision::Extended)
    return diagonalize(frame_form<ExtendedReal>(omega_m, omega_q, offset), options);
  return diagonalize(frame_form<double>(omega_m, omega_q, offset), options);
}

PolaritonCouplings extract_polariton_couplings(const SymplecticModes& modes, double g0, std::size_t phonon_mode) {
  if (modes.frequencies.size() != 2) throw ContractError("coupling extraction expects two normal modes");
  if (phonon_mode >= 2) throw DomainError("phonon mode index out of range");
  if (!modes.stable) throw ContractError("normal modes unstable: couplings undefined");
  if (modes.zero_mode) throw CriticalDivergenceError("zero mode at the critical point: coupling diverges");
  const auto row = static_cast<Eigen::Index>(phonon_mode);
  PolaritonCouplings out;
  out.g_minus = g0 * std::abs(modes.position_map(row, 0));
  out.g_plus = g0 * std::abs(modes.position_map(row, 1));
  return out;
}

}  // namespace critmech::oracle
