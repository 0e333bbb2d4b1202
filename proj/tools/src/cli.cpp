#include "critmech_cli/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>

#include "critmech/errors.hpp"
#include "critmech/sweep/sweep.hpp"
#include "inputs.hpp"

namespace critmech::cli {

namespace {

using Command = std::function<int(const Inputs&, std::ostream&)>;

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> table = {
      {"critical-point", cmd_critical_point},
      {"spectrum", cmd_spectrum},
      {"enhance", cmd_enhance},
      {"kerr", cmd_kerr},
      {"sweep", cmd_sweep},
      {"oracle", cmd_oracle},
      {"converge", cmd_converge},
  };
  return table;
}

void echo_config(const CLI::App& app, std::ostream& out) {
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_single_name();
    if (name.empty() || name == "help" || name == "config" || name == "version") continue;
    const auto results = opt->results();
    std::string value;
    if (!results.empty()) {
      for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
    } else {
      value = opt->get_default_str();
    }
    if (value.empty()) continue;
    out << "config." << name << '=' << value << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical-point optomechanics calculator"};
  app.set_config("--config", "", "Flat key = value (TOML/INI) file; command-line flags win");
  app.allow_config_extras(false);
  app.fallthrough();
  // At most one subcommand, so oracle targets such as "spectrum" stay positional.
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string(sweep::tool_version()));

  Inputs in;
  std::string command_opt;
  std::string preset_opt;
  std::string which_opt;

  app.add_option("--command", command_opt, "Command to run when none is given on the command line");
  app.add_option("--preset", preset_opt, "Sweep preset: fig2, fig3, custom");
  app.add_option("--which", which_opt, "Oracle target: spectrum, couplings, kerr, dicke");
  app.add_option("--profile", in.profile, "Parameter profile (nv-nanobeam)");
  app.add_option("--unit", in.unit, "Unit of frequency inputs: omega_m, hz, rad/s");
  app.add_option("--omega-m", in.omega_m, "Mechanical frequency");
  app.add_option("--omega-q", in.omega_q, "Spin frequency");
  app.add_option("--ratio", in.ratio, "omega_q / omega_m");
  app.add_option("--G", in.G, "Collective coupling");
  app.add_option("--g", in.g, "Single-spin coupling");
  app.add_option("--N", in.N, "Number of spins");
  app.add_option("--mu", in.mu, "Critical parameter G_c^2 / G^2");
  app.add_option("--g0", in.g0, "Bare optomechanical coupling");
  app.add_option("--omega-a", in.omega_a, "Cavity frequency");
  app.add_option("--omega-minus", in.omega_minus, "Target lower polariton frequency");
  app.add_option("--omega-m-over-omega-minus", in.omega_m_over_omega_minus, "Target omega_m / omega_minus");
  app.add_option("--g-minus", in.g_minus, "Lower polariton coupling (oracle kerr)");
  app.add_option("--out", in.out, "Output file (or file stem for multi-block sweeps)");
  app.add_option("--format", in.format, "Output format: csv, json")->capture_default_str();
  app.add_option("--tol", in.tol, "Oracle tolerance");
  app.add_option("--omega-floor", in.omega_floor, "Smallest omega_minus / omega_m treated as finite")
      ->capture_default_str();
  app.add_option("--workers", in.workers, "Sweep worker threads (0 = runtime default)")->capture_default_str();
  app.add_option("--oracle-check", in.oracle_check, "Add oracle columns to preset sweeps")->capture_default_str();
  app.add_option("--spec", in.spec_path, "Sweep spec JSON for sweep custom");
  app.add_option("--photons", in.photons, "Highest photon number for Kerr levels")->capture_default_str();
  app.add_option("--n-max", in.n_max, "Phonon / oscillator Fock cutoff")->capture_default_str();
  app.add_option("--n-list", in.n_list, "Spin numbers for Dicke runs")->delimiter(',')->capture_default_str();

  std::string sweep_preset;
  std::string oracle_which;
  for (const auto& [name, fn] : commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->fallthrough();
    if (name == "sweep") sub->add_option("preset", sweep_preset, "fig2, fig3 or custom");
    if (name == "oracle") sub->add_option("target", oracle_which, "spectrum, couplings, kerr or dicke");
  }

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error=" << e.what() << '\n';
    return kInvalidInput;
  }

  for (CLI::App* sub : app.get_subcommands()) in.command = sub->get_name();
  if (in.command.empty()) in.command = command_opt;
  if (!sweep_preset.empty()) in.preset = sweep_preset;
  else if (!preset_opt.empty()) in.preset = preset_opt;
  if (!oracle_which.empty()) in.which = oracle_which;
  else if (!which_opt.empty()) in.which = which_opt;

  const auto it = commands().find(in.command);
  if (it == commands().end()) {
    err << "error=" << (in.command.empty() ? std::string("no command given") : "unknown command '" + in.command + "'")
        << '\n';
    return kInvalidInput;
  }

  out << "version=" << sweep::tool_version() << '\n';
  out << "command=" << in.command << '\n';
  if (in.preset) out << "config.preset=" << *in.preset << '\n';
  if (in.which) out << "config.which=" << *in.which << '\n';
  echo_config(app, out);

  try {
    return it->second(in, out);
  } catch (const CriticalDivergenceError& e) {
    err << "error=" << e.what() << '\n';
    return kCriticalFloor;
  } catch (const PhaseError& e) {
    err << "error=" << e.what() << '\n';
    return kWrongPhase;
  } catch (const TruncationError& e) {
    err << "error=" << e.what() << '\n';
    return kOracleBreach;
  } catch (const ContractError& e) {
    err << "error=" << e.what() << '\n';
    return kOracleBreach;
  } catch (const IoError& e) {
    err << "error=" << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error=" << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace critmech::cli
