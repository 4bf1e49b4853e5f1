#include "epur/table.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace epur {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        throw std::invalid_argument("Table: cell count does not match columns");
    rows.push_back(std::move(cells));
}

void Table::add_numeric_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_double(v));
    add_row(std::move(cells));
}

namespace {

std::string csv_escape(const std::string& field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(columns[c]);
    }
    out += "\r\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += csv_escape(row[c]);
        }
        out += "\r\n";
    }
    return out;
}

nlohmann::json Table::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj;
        for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
        arr.push_back(std::move(obj));
    }
    return arr;
}

void Table::write(const std::string& path_base, const std::string& format) const {
    const std::string path =
        path_base + (format == "json" ? ".json" : ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write table: " + path);
    if (format == "json") out << to_json().dump(2) << "\n";
    else out << to_csv();
}

} // namespace epur
