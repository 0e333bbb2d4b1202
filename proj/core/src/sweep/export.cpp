#include "critmech/sweep/export.hpp"

#include <charconv>
#include <fstream>

#include "critmech/errors.hpp"

namespace critmech::sweep {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string spacing_name(Spacing s) { return s == Spacing::Log ? "log" : "linear"; }

}  // namespace

Format parse_format(const std::string& tag) {
  if (tag == "csv") return Format::Csv;
  if (tag == "json") return Format::Json;
  throw ConfigurationError("unknown format '" + tag + "' (csv, json)");
}

std::string to_string(Format format) { return format == Format::Json ? "json" : "csv"; }

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_csv(const SweepResult& result) {
  std::string out;
  for (const auto& c : result.columns) out += csv_field(c) + ",";
  out += "stable,valid,reason\n";
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
      const auto& v = i < row.values.size() ? row.values[i] : std::nullopt;
      if (v) out += format_number(*v);
      out += ',';
    }
    out += row.stable ? "true," : "false,";
    out += row.valid ? "true," : "false,";
    out += csv_field(row.reason);
    out += '\n';
  }
  return out;
}

void to_json(nlohmann::json& j, const Axis& axis) {
  j = {{"name", axis.name}, {"start", axis.start}, {"stop", axis.stop},
       {"count", axis.count}, {"spacing", spacing_name(axis.spacing)}};
  if (!axis.explicit_values.empty()) j["values"] = axis.explicit_values;
}

void from_json(const nlohmann::json& j, Axis& axis) {
  axis.name = j.at("name").get<std::string>();
  axis.start = j.at("start").get<double>();
  axis.stop = j.at("stop").get<double>();
  axis.count = j.at("count").get<int>();
  const auto spacing = j.value("spacing", std::string("linear"));
  if (spacing == "linear") {
    axis.spacing = Spacing::Linear;
  } else if (spacing == "log") {
    axis.spacing = Spacing::Log;
  } else {
    throw ConfigurationError("unknown axis spacing '" + spacing + "'");
  }
  axis.explicit_values = j.value("values", std::vector<double>{});
}

void to_json(nlohmann::json& j, const SweepSpec& spec) {
  j = {{"name", spec.name},
       {"axes", spec.axes},
       {"fixed", spec.fixed},
       {"outputs", spec.outputs},
       {"oracle_check", spec.oracle_check},
       {"omega_floor", spec.omega_floor},
       {"workers", spec.workers}};
}

void from_json(const nlohmann::json& j, SweepSpec& spec) {
  spec.name = j.value("name", std::string{});
  spec.axes = j.at("axes").get<std::vector<Axis>>();
  spec.fixed = j.value("fixed", std::map<std::string, double>{});
  spec.outputs = j.at("outputs").get<std::vector<std::string>>();
  spec.oracle_check = j.value("oracle_check", false);
  spec.omega_floor = j.value("omega_floor", kDefaultOmegaFloor);
  spec.workers = j.value("workers", 0);
}

nlohmann::json to_json_document(const SweepResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows) {
    nlohmann::json rec = nlohmann::json::object();
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
      const auto& v = i < row.values.size() ? row.values[i] : std::nullopt;
      rec[result.columns[i]] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    }
    rec["stable"] = row.stable;
    rec["valid"] = row.valid;
    rec["reason"] = row.reason;
    rows.push_back(std::move(rec));
  }
  return {{"spec", result.spec},
          {"provenance", {{"tool_version", result.provenance.tool_version},
                          {"timestamp", result.provenance.timestamp}}},
          {"columns", result.columns},
          {"rows", std::move(rows)}};
}

SweepResult from_json_document(const nlohmann::json& doc) {
  try {
    SweepResult result;
    result.spec = doc.at("spec").get<SweepSpec>();
    const auto& prov = doc.at("provenance");
    result.provenance = {prov.value("tool_version", std::string{}), prov.value("timestamp", std::string{})};
    result.columns = doc.at("columns").get<std::vector<std::string>>();
    for (const auto& rec : doc.at("rows")) {
      SweepRow row;
      for (const auto& c : result.columns) {
        const auto& v = rec.at(c);
        row.values.push_back(v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()));
      }
      row.stable = rec.at("stable").get<bool>();
      row.valid = rec.at("valid").get<bool>();
      row.reason = rec.value("reason", std::string{});
      result.rows.push_back(std::move(row));
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed sweep document: ") + e.what());
  }
}

void export_result(const SweepResult& result, Format format, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  if (format == Format::Csv) {
    os << to_csv(result);
  } else {
    os << to_json_document(result).dump(2) << '\n';
  }
  os.flush();
  if (!os) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace critmech::sweep
