#pragma once

// Row tables and their CSV / JSON encodings.
//
// Numbers are written with 12 significant digits, '.' as the decimal point
// and '\n' line endings, so identical inputs give byte-identical files.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fractal_qm/error.hpp"

namespace fractal_qm {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row) {
        if (row.size() != columns.size()) throw ParameterError("Table: row width differs from header");
        rows.push_back(std::move(row));
    }
    [[nodiscard]] std::size_t column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw ParameterError("Table: no column named " + name);
    }
};

[[nodiscard]] inline std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

inline void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
        out << '\n';
    }
}

/// Array of objects keyed by column name; values carry the CSV rounding.
inline void write_json(std::ostream& out, const Table& table) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json object = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const double value = std::stod(format_number(row[i]));
            if (value == std::floor(value) && std::abs(value) < 1e15)
                object[table.columns[i]] = static_cast<std::int64_t>(value);
            else
                object[table.columns[i]] = value;
        }
        doc.push_back(std::move(object));
    }
    out << doc.dump(2) << '\n';
}

/// Parses CSV written by write_csv. Throws ComputationError on malformed input.
[[nodiscard]] inline Table read_csv(std::istream& in) {
    Table table;
    std::string line;
    if (!std::getline(in, line) || line.empty()) throw ComputationError("read_csv: missing header");
    {
        std::stringstream header(line);
        std::string name;
        while (std::getline(header, name, ',')) table.columns.push_back(name);
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(field, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != field.size())
                throw ComputationError("read_csv: bad number on line " + std::to_string(line_no));
            row.push_back(value);
        }
        if (row.size() != table.columns.size())
            throw ComputationError("read_csv: wrong field count on line " + std::to_string(line_no));
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace fractal_qm
