#include "tiso/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace tiso {

using nlohmann::ordered_json;

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

double round_printed(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

namespace {

ordered_json rounded(const ordered_json& value) {
    if (value.is_number_float())
        return round_printed(value.get<double>());
    if (value.is_structured()) {
        ordered_json copy = value;
        for (auto& item : copy)
            item = rounded(item);
        return copy;
    }
    return value;
}

std::string csv_cell(const ordered_json& value) {
    if (value.is_number_float())
        return format_number(value.get<double>());
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_null())
        return "";
    return value.dump();
}

void write_meta_lines(std::ostream& out, const std::string& prefix, const ordered_json& object) {
    for (const auto& [key, value] : object.items())
        out << "# " << prefix << key << '=' << csv_cell(value) << '\n';
}

ordered_json constants_json(const PhysicalConstants& c) {
    return {{"hbar_c_mev_fm", c.hbar_c},
            {"e_squared_mev_fm", c.e_squared},
            {"amu_mev", c.amu},
            {"nucleon_mass_mev", c.nucleon_mass},
            {"r0_fm", c.r0}};
}

} // namespace

void OutputEnvelope::add_row(std::vector<ordered_json> row) {
    if (row.size() != columns.size())
        throw std::logic_error("row width does not match column count");
    rows.push_back(std::move(row));
}

void write_csv(const OutputEnvelope& envelope, std::ostream& out) {
    out << "# tool=" << tool_name << ' ' << tool_version << '\n';
    out << "# command=" << envelope.command << '\n';
    out << "# constants_fingerprint=" << envelope.constants.fingerprint() << '\n';
    write_meta_lines(out, "constants.", constants_json(envelope.constants));
    write_meta_lines(out, "param.", envelope.params);
    write_meta_lines(out, "note.", envelope.notes);
    write_meta_lines(out, "", envelope.summary);
    for (std::size_t i = 0; i < envelope.columns.size(); ++i)
        out << (i ? "," : "") << envelope.columns[i];
    out << '\n';
    for (const auto& row : envelope.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
}

void write_json(const OutputEnvelope& envelope, std::ostream& out) {
    ordered_json doc;
    doc["metadata"] = {{"tool", tool_name},
                       {"version", tool_version},
                       {"command", envelope.command},
                       {"constants_fingerprint", envelope.constants.fingerprint()},
                       {"constants", rounded(constants_json(envelope.constants))},
                       {"notes", rounded(envelope.notes)}};
    doc["params"] = rounded(envelope.params);
    ordered_json rows = ordered_json::array();
    for (const auto& row : envelope.rows) {
        ordered_json item = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
            item[envelope.columns[i]] = rounded(row[i]);
        rows.push_back(std::move(item));
    }
    doc["data"] = {{"summary", rounded(envelope.summary)}, {"rows", std::move(rows)}};
    out << doc.dump(2) << '\n';
}

void write(const OutputEnvelope& envelope, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json)
        write_json(envelope, out);
    else
        write_csv(envelope, out);
}

} // namespace tiso
