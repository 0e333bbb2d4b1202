#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "critmech/sweep/sweep.hpp"

namespace critmech::sweep {

enum class Format { Csv, Json };

Format parse_format(const std::string& tag);
std::string to_string(Format format);

// Header = columns then stable, valid, reason. Numbers with 17 significant
// digits, empty cells for missing values, LF line endings. No timestamp,
// so identical specs give identical bytes.
std::string to_csv(const SweepResult& result);

// {"spec": ..., "provenance": ..., "columns": [...], "rows": [{col: value, ...}]}
nlohmann::json to_json_document(const SweepResult& result);
SweepResult from_json_document(const nlohmann::json& doc);

void to_json(nlohmann::json& j, const Axis& axis);
void from_json(const nlohmann::json& j, Axis& axis);
void to_json(nlohmann::json& j, const SweepSpec& spec);
void from_json(const nlohmann::json& j, SweepSpec& spec);

// IoError when the file cannot be written.
void export_result(const SweepResult& result, Format format, const std::filesystem::path& path);

// Formats a double as the CSV writer does.
std::string format_number(double value);

}  // namespace critmech::sweep
