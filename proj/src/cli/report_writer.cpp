#include "taylorlab/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace taylorlab::cli {

bool Report::all_pass() const
{
    return std::all_of(invariants.begin(), invariants.end(),
                       [](const CheckReport& c) { return c.pass; });
}

std::string format_number(double v)
{
    if (!std::isfinite(v))
        return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string json_string(const std::string& s)
{
    return nlohmann::json(s).dump();
}

void write_json_cell(const Cell& c, std::ostream& out)
{
    std::visit(
        [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                out << "null";
            else if constexpr (std::is_same_v<T, bool>)
                out << (v ? "true" : "false");
            else if constexpr (std::is_same_v<T, std::int64_t>)
                out << v;
            else if constexpr (std::is_same_v<T, double>)
                out << format_number(v);
            else
                out << json_string(v);
        },
        c);
}

void write_json_record(const Record& r, std::ostream& out, const char* indent)
{
    out << "{";
    for (std::size_t i = 0; i < r.size(); ++i) {
        out << (i == 0 ? "\n" : ",\n") << indent << "  " << json_string(r[i].first) << ": ";
        write_json_cell(r[i].second, out);
    }
    out << (r.empty() ? "}" : std::string("\n") + indent + "}");
}

std::string csv_field(const Cell& c)
{
    std::string text = std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return "";
            else if constexpr (std::is_same_v<T, bool>)
                return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, std::int64_t>)
                return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>)
                return std::isfinite(v) ? format_number(v) : "";
            else
                return v;
        },
        c);
    if (text.find_first_of(",\"\r\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

}  // namespace

void write_json(const Report& report, std::ostream& out)
{
    out << "{\n  \"command\": " << json_string(report.command) << ",\n  \"config\": ";
    write_json_record(report.config, out, "  ");
    out << ",\n  \"rows\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        out << (i == 0 ? "\n    " : ",\n    ");
        write_json_record(report.rows[i], out, "    ");
    }
    out << (report.rows.empty() ? "]" : "\n  ]") << ",\n  \"invariants\": [";
    for (std::size_t i = 0; i < report.invariants.size(); ++i) {
        const CheckReport& c = report.invariants[i];
        out << (i == 0 ? "\n    " : ",\n    ");
        write_json_record({{"name", c.name},
                           {"pass", c.pass},
                           {"measured_gap", c.measured_gap},
                           {"threshold", c.threshold}},
                          out, "    ");
    }
    out << (report.invariants.empty() ? "]" : "\n  ]") << "\n}\n";
}

void write_csv(const Report& report, const std::vector<std::string>& columns, std::ostream& out)
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << csv_field(columns[i]);
    out << '\n';
    for (const Record& row : report.rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            auto it = std::find_if(row.begin(), row.end(),
                                   [&](const auto& field) { return field.first == columns[i]; });
            out << (i ? "," : "") << (it == row.end() ? std::string() : csv_field(it->second));
        }
        out << '\n';
    }
}

}  // namespace taylorlab::cli
