#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "critmech/errors.hpp"
#include "critmech/oracle/dicke.hpp"
#include "critmech/oracle/eigensolve.hpp"
#include "critmech/oracle/sector.hpp"
#include "critmech/oracle/symplectic.hpp"
#include "critmech/sweep/convergence.hpp"
#include "critmech/sweep/export.hpp"
#include "critmech/sweep/presets.hpp"
#include "critmech_cli/cli.hpp"
#include "inputs.hpp"

namespace critmech::cli {

namespace {

double rel_delta(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

const Point& require_coupling(const Point& p) {
  if (!p.offset) throw ConfigurationError("no coupling given: set one of mu, G, (g and N), omega_minus");
  return p;
}

// Superradiant-branch spectrum; PhaseError in the normal phase.
PolaritonSpectrum superradiant_spectrum(const Point& p) {
  require_coupling(p);
  if (*p.offset < 0.0)
    throw PhaseError("normal phase (G < G_c): superradiant-frame results undefined; use the oracle path");
  return branch_spectrum(1.0, p.omega_q, *p.offset);
}

std::string phase_of(const Point& p) {
  if (*p.offset == 0.0) return std::string(to_string(Phase::Critical));
  return std::string(to_string(*p.offset > 0.0 ? Phase::Superradiant : Phase::Normal));
}

void print_point(const Point& p, std::ostream& out) {
  kv(out, "unit", std::string("omega_m"));
  if (p.omega_m_rad_per_s > 0.0) kv(out, "omega_m_rad_per_s", p.omega_m_rad_per_s);
  kv(out, "omega_q_over_omega_m", p.omega_q);
  if (p.G) {
    kv(out, "coupling_from", p.selector);
    kv(out, "G_over_omega_m", *p.G);
    kv(out, "mu", *p.mu);
    kv(out, "branch_offset", *p.offset);
  }
}

int finish_oracle(std::ostream& out, double max_delta, double tol) {
  kv(out, "max_rel_delta", max_delta);
  kv(out, "tolerance", tol);
  const bool pass = max_delta <= tol;
  kv(out, "pass", std::string(pass ? "true" : "false"));
  return pass ? kOk : kOracleBreach;
}

std::filesystem::path output_path(const Inputs& in, const std::string& fallback_stem, const std::string& suffix) {
  const std::string stem = in.out ? *in.out : fallback_stem;
  return stem + suffix + "." + in.format;
}

}  // namespace

int cmd_critical_point(const Inputs& in, std::ostream& out) {
  const Point p = resolve(in);
  print_point(p, out);
  const double g_crit = critical_coupling(1.0, p.omega_q);
  kv(out, "g_crit_over_omega_m", g_crit);
  if (p.omega_m_rad_per_s > 0.0) {
    kv(out, "g_crit_rad_per_s", g_crit * p.omega_m_rad_per_s);
    kv(out, "g_crit_hz", g_crit * p.omega_m_rad_per_s / (2.0 * std::numbers::pi));
  }
  if (p.g_single) kv(out, "n_required", required_spin_number(g_crit, *p.g_single));
  if (p.G) kv(out, "phase", phase_of(p));
  return kOk;
}

int cmd_spectrum(const Inputs& in, std::ostream& out) {
  const Point p = require_coupling(resolve(in));
  print_point(p, out);
  kv(out, "phase", phase_of(p));
  PolaritonSpectrum s;
  if (*p.offset < 0.0) {
    // Undisplaced normal-phase modes.
    s = polariton_frequencies(1.0, p.omega_q, *p.G, 1.0);
  } else {
    s = branch_spectrum(1.0, p.omega_q, *p.offset);
    const auto m = closed_form_coefficients(1.0, p.omega_q, *p.G, *p.mu);
    kv(out, "Omega_q", m.Omega_q);
    kv(out, "G_eff", m.G_eff);
    kv(out, "eta", m.eta);
  }
  kv(out, "omega_plus", s.omega_plus);
  kv(out, "omega_minus_sq", s.omega_minus_sq);
  if (s.omega_minus) kv(out, "omega_minus", *s.omega_minus);
  kv(out, "theta", s.theta);
  kv(out, "stable", std::string(s.stable ? "true" : "false"));
  return kOk;
}

int cmd_enhance(const Inputs& in, std::ostream& out) {
  const Point p = resolve(in);
  const auto s = superradiant_spectrum(p);
  print_point(p, out);
  const auto unit = optomech_couplings(1.0, 1.0, s, in.omega_floor);
  kv(out, "omega_plus", s.omega_plus);
  kv(out, "omega_minus", *s.omega_minus);
  kv(out, "omega_m_over_omega_minus", 1.0 / *s.omega_minus);
  kv(out, "theta", s.theta);
  kv(out, "g_plus_over_g0", unit.g_plus);
  kv(out, "g_minus_over_g0", unit.g_minus);
  kv(out, "g_plus", p.g0 * unit.g_plus);
  kv(out, "g_minus", p.g0 * unit.g_minus);
  kv(out, "coop_ratio", unit.coop_ratio);
  kv(out, "chi", kerr_coefficient(p.g0 * unit.g_minus, *s.omega_minus));
  kv(out, "chi_sign_note", std::string(CouplingReport::chi_sign_note));
  return kOk;
}

int cmd_kerr(const Inputs& in, std::ostream& out) {
  const Point p = resolve(in);
  const auto s = superradiant_spectrum(p);
  print_point(p, out);
  const auto unit = optomech_couplings(1.0, 1.0, s, in.omega_floor);
  const double g_minus = p.g0 * unit.g_minus;
  const double chi = kerr_coefficient(g_minus, *s.omega_minus);
  kv(out, "omega_minus", *s.omega_minus);
  kv(out, "g_minus", g_minus);
  kv(out, "chi", chi);
  kv(out, "chi_over_omega_minus", chi / *s.omega_minus);
  kv(out, "chi_sign_note", std::string(CouplingReport::chi_sign_note));
  for (int n = 0; n <= in.photons; ++n) kv(out, "E_" + std::to_string(n), p.omega_a * n - chi * n * n);
  return kOk;
}

int cmd_sweep(const Inputs& in, std::ostream& out) {
  const std::string preset = in.preset.value_or("");
  std::vector<sweep::SweepResult> blocks;
  const auto format = sweep::parse_format(in.format);
  if (preset == "fig2" || preset == "fig3") {
    const double ratio = in.ratio.value_or(preset == "fig2" ? 4.0 : 10.0);
    auto specs = preset == "fig2" ? sweep::fig2_specs(ratio, in.oracle_check) : sweep::fig3_specs(ratio, in.oracle_check);
    for (auto& spec : specs) {
      spec.omega_floor = in.omega_floor;
      spec.workers = in.workers;
      blocks.push_back(sweep::run_sweep(spec));
    }
  } else if (preset == "custom") {
    if (!in.spec_path) throw ConfigurationError("sweep custom needs --spec <file.json>");
    std::ifstream is(*in.spec_path);
    if (!is) throw IoError("cannot read '" + *in.spec_path + "'");
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigurationError(std::string("spec file: ") + e.what());
    }
    sweep::SweepSpec spec;
    try {
      spec = j.get<sweep::SweepSpec>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigurationError(std::string("spec file: ") + e.what());
    }
    if (in.workers > 0) spec.workers = in.workers;
    blocks.push_back(sweep::run_sweep(spec));
  } else {
    throw ConfigurationError("sweep preset must be fig2, fig3 or custom");
  }

  const double tol = in.tol.value_or(1e-8);
  int status = kOk;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& r = blocks[b];
    const std::string name = r.spec.name.empty() ? preset : r.spec.name;
    const auto path =
        output_path(in, preset, preset == "custom" ? std::string() : "_" + sweep::block_suffix(b));
    sweep::export_result(r, format, path);
    kv(out, name + ".file", path.string());
    kv(out, name + ".rows", static_cast<double>(r.rows.size()));
    kv(out, name + ".invalid", static_cast<double>(r.invalid_count()));
    std::map<std::string, int> reasons;
    for (const auto& row : r.rows)
      if (!row.valid) ++reasons[row.reason];
    for (const auto& [reason, count] : reasons) kv(out, name + ".invalid." + reason, static_cast<double>(count));
    if (const auto idx = r.column_index(sweep::kOracleDelta)) {
      double worst = 0.0;
      for (const auto& row : r.rows)
        if (row.values[*idx]) worst = std::max(worst, *row.values[*idx]);
      kv(out, name + ".oracle_max_rel_delta", worst);
      if (worst > tol) status = kOracleBreach;
    }
  }
  return status;
}

int cmd_oracle(const Inputs& in, std::ostream& out) {
  const std::string which = in.which.value_or("");
  if (which == "spectrum" || which == "couplings") {
    const Point p = resolve(in);
    const auto s = superradiant_spectrum(p);
    print_point(p, out);
    const auto modes = oracle::superradiant_frame_modes_at_offset(1.0, p.omega_q, *p.offset, oracle::Precision::Extended);
    const double tol = in.tol.value_or(1e-10);
    if (which == "spectrum") {
      const double o_minus = modes.zero_mode ? 0.0 : modes.frequencies[0];
      kv(out, "omega_minus_analytic", s.omega_minus.value_or(0.0));
      kv(out, "omega_minus_oracle", o_minus);
      kv(out, "omega_plus_analytic", s.omega_plus);
      kv(out, "omega_plus_oracle", modes.frequencies[1]);
      kv(out, "symplectic_error", modes.symplectic_error);
      return finish_oracle(out,
                           std::max(rel_delta(s.omega_minus.value_or(0.0), o_minus),
                                    rel_delta(s.omega_plus, modes.frequencies[1])),
                           tol);
    }
    const auto a = optomech_couplings(p.g0, 1.0, s, in.omega_floor);
    const auto o = oracle::extract_polariton_couplings(modes, p.g0);
    kv(out, "g_minus_analytic", a.g_minus);
    kv(out, "g_minus_oracle", o.g_minus);
    kv(out, "g_plus_analytic", a.g_plus);
    kv(out, "g_plus_oracle", o.g_plus);
    return finish_oracle(out, std::max(rel_delta(a.g_minus, o.g_minus), rel_delta(a.g_plus, o.g_plus)), tol);
  }

  if (which == "kerr") {
    double g_minus = 0.0;
    double w_minus = 0.0;
    double omega_a = 0.0;
    if (in.g_minus) {
      // Direct (g_minus, omega_minus) pair in omega_m units.
      Inputs bare = in;
      bare.omega_minus.reset();
      if (!bare.omega_q && !bare.ratio) bare.ratio = 1.0;
      const Point p = resolve(bare);
      if (!in.omega_minus) throw ConfigurationError("oracle kerr with g_minus needs omega_minus");
      const double wm = in.omega_m.value_or(1.0);
      g_minus = *in.g_minus / wm;
      w_minus = *in.omega_minus / wm;
      omega_a = p.omega_a;
    } else {
      const Point p = resolve(in);
      const auto s = superradiant_spectrum(p);
      print_point(p, out);
      g_minus = p.g0 * optomech_couplings(1.0, 1.0, s, in.omega_floor).g_minus;
      w_minus = *s.omega_minus;
      omega_a = p.omega_a;
    }
    if (in.photons < 2) throw DomainError("need at least photons = 2 for a Kerr fit");
    std::vector<double> e;
    double worst_shift = 0.0;
    for (int n = 0; n <= in.photons; ++n) {
      const auto sec = oracle::optomech_sector_spectrum(n, omega_a, w_minus, g_minus, in.n_max);
      e.push_back(sec.energies(0));
      worst_shift = std::max(worst_shift, sec.doubling_shift);
      kv(out, "E_" + std::to_string(n), sec.energies(0));
    }
    const auto fit = oracle::fit_kerr(e);
    const double chi = kerr_coefficient(g_minus, w_minus);
    kv(out, "g_minus", g_minus);
    kv(out, "omega_minus", w_minus);
    kv(out, "chi_analytic", chi);
    kv(out, "chi_fit", fit.chi);
    kv(out, "fit_max_residual", fit.max_residual);
    kv(out, "truncation_shift", worst_shift);
    return finish_oracle(out, rel_delta(chi, fit.chi), in.tol.value_or(1e-8));
  }

  if (which == "dicke") {
    const Point p = require_coupling(resolve(in));
    print_point(p, out);
    const oracle::DickeCoupling c{1.0, p.omega_q, *p.G};
    oracle::EigensolveOptions opts;
    opts.compute_vectors = false;
    opts.check_residuals = false;
    double worst = 0.0;
    for (int n : in.n_list) {
      const auto spin = oracle::hermitian_eigensolve(
          oracle::dicke_hamiltonian(oracle::build_space({in.n_max}, n), c), opts);
      const auto hp = oracle::hermitian_eigensolve(
          oracle::holstein_primakoff_hamiltonian(oracle::build_space({in.n_max, n}), c, n), opts);
      const double scale = std::max(1.0, spin.eigenvalues.cwiseAbs().maxCoeff());
      const double d = (spin.eigenvalues - hp.eigenvalues).cwiseAbs().maxCoeff() / scale;
      kv(out, "N" + std::to_string(n) + ".ground_energy", spin.eigenvalues(0));
      kv(out, "N" + std::to_string(n) + ".max_rel_delta", d);
      worst = std::max(worst, d);
    }
    return finish_oracle(out, worst, in.tol.value_or(1e-9));
  }
  throw ConfigurationError("oracle target must be spectrum, couplings, kerr or dicke");
}

int cmd_converge(const Inputs& in, std::ostream& out) {
  const Point p = require_coupling(resolve(in));
  print_point(p, out);
  const auto r = sweep::dicke_convergence_study(1.0, p.omega_q, *p.G, in.n_list, in.n_max);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::ostringstream line;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      if (c) line << ' ';
      line << r.columns[c] << '=' << sweep::format_number(*r.rows[i].values[c]);
    }
    out << line.str() << '\n';
  }
  if (in.out) {
    const auto path = output_path(in, "converge", "");
    sweep::export_result(r, sweep::parse_format(in.format), path);
    kv(out, "file", path.string());
  }
  return kOk;
}

}  // namespace critmech::cli
