#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace amp {

// Numeric table in long format: one value column per named quantity, one row
// per grid point.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Round-trip exact decimal rendering (17 significant digits).
std::string format_double(double v);

// Writes "# amp-csv v1", the column-name row, then the data rows. Output is
// deterministic byte-for-byte for identical tables.
void write_csv(const std::filesystem::path& path, const Table& t);

Table read_csv(const std::filesystem::path& path);

// Sidecar metadata next to a CSV artifact (2-space indent, sorted keys, no
// timestamps, so repeated runs produce identical bytes).
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace amp
