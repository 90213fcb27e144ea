#include "laserfel/csv.hpp"

#include <stdexcept>

#include "laserfel/config.hpp"

namespace laserfel::cli {

std::string quote_field(const std::string& text) {
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string format_cell(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
    return quote_field(std::get<std::string>(cell));
}

namespace {

void append_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += "\r\n";
}

std::string header_field(const std::string& name) {
    return name.find_first_of(",\"\r\n") == std::string::npos ? name : quote_field(name);
}

}  // namespace

std::string Table::to_csv() const {
    std::string out;
    std::vector<std::string> fields;
    for (const auto& c : columns) fields.push_back(header_field(c));
    append_row(out, fields);
    for (const auto& row : rows) {
        if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
        fields.clear();
        for (const auto& cell : row) fields.push_back(format_cell(cell));
        append_row(out, fields);
    }
    return out;
}

std::string Table::to_long_csv() const {
    std::string out;
    append_row(out, {"row", "column", "value"});
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != columns.size()) throw std::logic_error("row width does not match header");
        for (std::size_t c = 0; c < columns.size(); ++c)
            append_row(out, {std::to_string(r), header_field(columns[c]), format_cell(rows[r][c])});
    }
    return out;
}

}  // namespace laserfel::cli
