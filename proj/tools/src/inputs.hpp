#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "critmech/criticality.hpp"
#include "critmech/sweep/export.hpp"

namespace critmech::cli {

// Raw flag / config values, before unit conversion.
struct Inputs {
  std::string command;
  std::optional<std::string> preset;
  std::optional<std::string> which;

  std::optional<std::string> profile;
  std::optional<std::string> unit;
  std::optional<double> omega_m;
  std::optional<double> omega_q;
  std::optional<double> ratio;
  std::optional<double> G;
  std::optional<double> g;
  std::optional<double> N;
  std::optional<double> mu;
  std::optional<double> g0;
  std::optional<double> omega_a;
  std::optional<double> omega_minus;
  std::optional<double> omega_m_over_omega_minus;
  std::optional<double> g_minus;

  std::optional<std::string> out;
  std::string format = "csv";
  std::optional<double> tol;
  double omega_floor = kDefaultOmegaFloor;
  int workers = 0;
  bool oracle_check = true;
  std::optional<std::string> spec_path;
  int photons = 3;
  int n_max = 80;
  std::vector<int> n_list = {8, 16, 24};
};

// Everything in units of omega_m (omega_m = 1).
struct Point {
  double omega_m_rad_per_s = 0.0;  // 0 when the run is dimensionless
  double omega_q = 1.0;
  double g0 = 1.0;
  double omega_a = 0.0;
  std::optional<double> g_single;
  std::optional<double> n_spins;
  // Coupling, when one was given: G and the branch offset 1/mu^2 - 1
  // (negative in the normal phase).
  std::optional<double> G;
  std::optional<double> offset;
  std::optional<double> mu;
  std::string selector;  // which input fixed the coupling
};

Point resolve(const Inputs& in);

void kv(std::ostream& os, const std::string& key, double value);
void kv(std::ostream& os, const std::string& key, const std::string& value);

int cmd_critical_point(const Inputs& in, std::ostream& out);
int cmd_spectrum(const Inputs& in, std::ostream& out);
int cmd_enhance(const Inputs& in, std::ostream& out);
int cmd_kerr(const Inputs& in, std::ostream& out);
int cmd_sweep(const Inputs& in, std::ostream& out);
int cmd_oracle(const Inputs& in, std::ostream& out);
int cmd_converge(const Inputs& in, std::ostream& out);

}  // namespace critmech::cli
