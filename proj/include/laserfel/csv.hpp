#pragma once

#include <string>
#include <variant>
#include <vector>

namespace laserfel::cli {

using Cell = std::variant<double, bool, std::string>;

/// Header plus rows; every row has one cell per column.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// RFC 4180 text: numbers as %.16e, booleans as true/false, strings quoted.
    std::string to_csv() const;
    /// Long format for plotting: row, column, value.
    std::string to_long_csv() const;
};

std::string format_cell(const Cell& cell);
std::string quote_field(const std::string& text);

}  // namespace laserfel::cli
