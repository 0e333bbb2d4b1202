#include "critmech/sweep/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <exception>
#include <set>

#include <omp.h>

#include "critmech/errors.hpp"
#include "point.hpp"

#ifndef CRITMECH_VERSION
#define CRITMECH_VERSION "0.0.0"
#endif

namespace critmech::sweep {

namespace {

const std::vector<std::string> kCouplingSelectors = {"G", "G_over_omega_m", "mu", "omega_m_over_omega_minus",
                                                     "Gc_minus_G_over_omega_m"};

bool contains(const std::vector<std::string>& list, const std::string& key) {
  return std::find(list.begin(), list.end(), key) != list.end();
}

}  // namespace

const std::vector<std::string>& known_parameters() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = {"omega_m", "omega_q", "omega_q_over_omega_m", "g0", "omega_a"};
    v.insert(v.end(), kCouplingSelectors.begin(), kCouplingSelectors.end());
    return v;
  }();
  return names;
}

const std::vector<std::string>& known_outputs() {
  static const std::vector<std::string> names = {
      "omega_minus",    "omega_plus", "omega_minus_over_omega_m", "omega_plus_over_omega_m",
      "omega_minus_sq_over_omega_m_sq", "theta", "mu", "G_over_omega_m",
      "g_minus_over_g0", "g_plus_over_g0", "chi", "coop_ratio"};
  return names;
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) throw SweepError("a sweep needs one or two axes");

  std::set<std::string> seen;
  auto claim = [&seen](const std::string& key) {
    if (!contains(known_parameters(), key)) throw SweepError("unknown parameter '" + key + "'");
    if (!seen.insert(key).second) throw SweepError("parameter '" + key + "' given more than once");
  };
  for (const Axis& axis : axes) {
    claim(axis.name);
    if (axis.explicit_values.empty()) {
      if (axis.count < 2) throw SweepError("axis '" + axis.name + "' needs at least 2 points");
      if (axis.spacing == Spacing::Log && !(axis.start > 0.0 && axis.stop > 0.0))
        throw SweepError("log axis '" + axis.name + "' must stay positive");
    }
  }
  for (const auto& [key, value] : fixed) claim(key);

  const auto selectors = std::count_if(kCouplingSelectors.begin(), kCouplingSelectors.end(),
                                       [&seen](const std::string& k) { return seen.count(k) > 0; });
  if (selectors != 1) throw SweepError("exactly one coupling selector is required");
  const bool has_wq = seen.count("omega_q") > 0;
  const bool has_ratio = seen.count("omega_q_over_omega_m") > 0;
  if (has_wq == has_ratio) throw SweepError("give exactly one of omega_q and omega_q_over_omega_m");

  if (outputs.empty()) throw SweepError("no outputs requested");
  std::set<std::string> out_seen;
  for (const auto& key : outputs) {
    if (!contains(known_outputs(), key)) throw SweepError("unknown output '" + key + "'");
    if (!out_seen.insert(key).second) throw SweepError("output '" + key + "' requested twice");
  }
  if (!(omega_floor >= 0.0)) throw SweepError("omega floor must be non-negative");
  if (workers < 0) throw SweepError("workers must be non-negative");
}

std::optional<std::size_t> SweepResult::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<std::optional<double>> SweepResult::column(const std::string& name) const {
  const auto idx = column_index(name);
  if (!idx) throw SweepError("no column '" + name + "'");
  std::vector<std::optional<double>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.values.at(*idx));
  return out;
}

std::size_t SweepResult::invalid_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.valid; }));
}

std::string tool_version() { return CRITMECH_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();

  SweepResult result;
  result.spec = spec;
  result.provenance = {tool_version(), utc_timestamp()};

  std::vector<std::vector<double>> grids;
  for (const Axis& axis : spec.axes) {
    grids.push_back(axis.values());
    result.columns.push_back(axis.name);
  }
  for (const auto& key : spec.outputs) result.columns.push_back(key);
  if (spec.oracle_check)
    for (const char* key : {kOracleOmegaMinus, kOracleOmegaPlus, kOracleGMinus, kOracleGPlus, kOracleDelta})
      result.columns.emplace_back(key);

  const std::size_t inner = grids.size() == 2 ? grids[1].size() : 1;
  const std::size_t total = grids[0].size() * inner;
  result.rows.resize(total);

  std::vector<std::exception_ptr> failures(total);
  const int threads = spec.workers > 0 ? spec.workers : omp_get_max_threads();
  const auto n_rows = static_cast<long long>(total);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < n_rows; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      std::map<std::string, double> params = spec.fixed;
      std::vector<double> axis_values = {grids[0][idx / inner]};
      if (grids.size() == 2) axis_values.push_back(grids[1][idx % inner]);
      for (std::size_t a = 0; a < axis_values.size(); ++a) params[spec.axes[a].name] = axis_values[a];

      const auto outcome = detail::evaluate_point(params, spec.outputs, spec.oracle_check, spec.omega_floor);
      SweepRow& row = result.rows[idx];
      row.values.reserve(result.columns.size());
      for (double v : axis_values) row.values.emplace_back(v);
      for (std::size_t c = axis_values.size(); c < result.columns.size(); ++c) {
        const auto it = outcome.values.find(result.columns[c]);
        row.values.push_back(it == outcome.values.end() ? std::nullopt : it->second);
      }
      row.stable = outcome.stable;
      row.valid = outcome.valid;
      row.reason = outcome.reason;
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }

  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  if (result.invalid_count() == total)
    throw SweepError("every row invalid; first reason: " + result.rows.front().reason);
  return result;
}

}  // namespace critmech::sweep
