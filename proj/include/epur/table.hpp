#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace epur {

/// Lossless double -> string (%.17g style round-trip).
std::string format_double(double v);

/// Column-labeled string table with RFC-4180 CSV output.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    explicit Table(std::vector<std::string> cols = {}) : columns(std::move(cols)) {}

    void add_row(std::vector<std::string> cells);
    void add_numeric_row(const std::vector<double>& values);

    std::string to_csv() const;
    nlohmann::json to_json() const;
    void write(const std::string& path_base, const std::string& format) const;
};

} // namespace epur
