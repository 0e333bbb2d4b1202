#include "critmech/records.hpp"

namespace critmech {

using nlohmann::json;

void to_json(json& j, const SystemParams& p) {
  j = json{{"omega_m", p.omega_m}, {"omega_q", p.omega_q}, {"g0", p.g0}, {"omega_a", p.omega_a}};
  if (p.g_single) j["g_single"] = *p.g_single;
  if (p.n_spins) j["n_spins"] = *p.n_spins;
  if (p.g_collective) j["g_collective"] = *p.g_collective;
}

void from_json(const json& j, SystemParams& p) {
  p = SystemParams{};
  j.at("omega_m").get_to(p.omega_m);
  j.at("omega_q").get_to(p.omega_q);
  p.g0 = j.value("g0", 0.0);
  p.omega_a = j.value("omega_a", 0.0);
  if (j.contains("g_single")) p.g_single = j.at("g_single").get<double>();
  if (j.contains("n_spins")) p.n_spins = j.at("n_spins").get<std::uint64_t>();
  if (j.contains("g_collective")) p.g_collective = j.at("g_collective").get<double>();
}

void to_json(json& j, const CriticalFrame& f) {
  j = json{{"g_crit", f.g_crit}, {"mu", f.mu}, {"alpha_b", f.alpha_b}, {"alpha_c", f.alpha_c}, {"k", f.k}};
}

void from_json(const json& j, CriticalFrame& f) {
  j.at("g_crit").get_to(f.g_crit);
  j.at("mu").get_to(f.mu);
  j.at("alpha_b").get_to(f.alpha_b);
  j.at("alpha_c").get_to(f.alpha_c);
  j.at("k").get_to(f.k);
}

void to_json(json& j, const QuadraticModel& m) {
  j = json{{"omega_m", m.omega_m}, {"Omega_q", m.Omega_q}, {"E_b", m.E_b},
           {"E_c", m.E_c},         {"G_eff", m.G_eff},     {"eta", m.eta}};
}

void from_json(const json& j, QuadraticModel& m) {
  j.at("omega_m").get_to(m.omega_m);
  j.at("Omega_q").get_to(m.Omega_q);
  j.at("E_b").get_to(m.E_b);
  j.at("E_c").get_to(m.E_c);
  j.at("G_eff").get_to(m.G_eff);
  j.at("eta").get_to(m.eta);
}

void to_json(json& j, const PolaritonSpectrum& s) {
  j = json{{"omega_plus", s.omega_plus},
           {"omega_minus_sq", s.omega_minus_sq},
           {"omega_minus", s.omega_minus ? json(*s.omega_minus) : json(nullptr)},
           {"theta", s.theta},
           {"stable", s.stable}};
}

void from_json(const json& j, PolaritonSpectrum& s) {
  j.at("omega_plus").get_to(s.omega_plus);
  j.at("omega_minus_sq").get_to(s.omega_minus_sq);
  const auto& wm = j.at("omega_minus");
  s.omega_minus = wm.is_null() ? std::nullopt : std::optional<double>(wm.get<double>());
  j.at("theta").get_to(s.theta);
  j.at("stable").get_to(s.stable);
}

void to_json(json& j, const CouplingReport& r) {
  j = json{{"g_plus", r.g_plus},
           {"g_minus", r.g_minus},
           {"chi", r.chi},
           {"chi_sign_note", CouplingReport::chi_sign_note},
           {"coop_ratio", r.coop_ratio}};
}

void from_json(const json& j, CouplingReport& r) {
  j.at("g_plus").get_to(r.g_plus);
  j.at("g_minus").get_to(r.g_minus);
  j.at("chi").get_to(r.chi);
  j.at("coop_ratio").get_to(r.coop_ratio);
}

}  // namespace critmech
