#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiso/constants.hpp"

namespace tiso {

inline constexpr const char* tool_name = "tiso";
inline constexpr const char* tool_version = "1.0.0";

enum class OutputFormat { Csv, Json };

/// Result of one CLI command: parameter echo, scalar summary and a table.
/// Cells hold numbers, strings, booleans or null.
struct OutputEnvelope {
    std::string command;
    PhysicalConstants constants;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    nlohmann::ordered_json notes = nlohmann::ordered_json::object();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::ordered_json>> rows;

    void add_row(std::vector<nlohmann::ordered_json> row);
};

/// 9 significant digits, "%.9g".
std::string format_number(double value);

/// Rounds to the value that format_number prints.
double round_printed(double value);

/// Leading "# key=value" metadata lines, then a header row and data rows.
void write_csv(const OutputEnvelope& envelope, std::ostream& out);

/// One object {metadata, params, data}; data holds "summary" and "rows".
void write_json(const OutputEnvelope& envelope, std::ostream& out);

void write(const OutputEnvelope& envelope, OutputFormat format, std::ostream& out);

} // namespace tiso
