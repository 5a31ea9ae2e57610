#pragma once

#include "taylorlab/check_report.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taylorlab::cli {

/// A report cell. monostate is a missing value: JSON null, an empty CSV field.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

/// Ordered name/value pairs; field order is the output column order.
using Record = std::vector<std::pair<std::string, Cell>>;

struct Report
{
    std::string command;
    Record config;
    std::vector<Record> rows;
    std::vector<CheckReport> invariants;

    bool all_pass() const;
};

/// 17 significant digits; non-finite values become null.
std::string format_number(double v);

/// {"command", "config", "rows", "invariants"} with invariants as
/// {name, pass, measured_gap, threshold}.
void write_json(const Report& report, std::ostream& out);

/// Header row from `columns`, then one line per row, RFC 4180 quoting, LF line endings.
void write_csv(const Report& report, const std::vector<std::string>& columns, std::ostream& out);

}  // namespace taylorlab::cli
