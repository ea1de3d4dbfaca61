#include "amp/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amp {

namespace {

constexpr const char* kMagic = "# amp-csv v1";

void check_table(const Table& t) {
    if (t.columns.empty()) throw std::invalid_argument("table needs at least one column");
    for (const std::vector<double>& row : t.rows)
        if (row.size() != t.columns.size())
            throw std::invalid_argument("table row width does not match the column count");
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::filesystem::path& path, const Table& t) {
    check_table(t);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << kMagic << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const std::vector<double>& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_double(row[c]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Table read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != kMagic)
        throw std::runtime_error(path.string() + " is not an amp-csv v1 file");

    Table t;
    if (!std::getline(in, line)) throw std::runtime_error(path.string() + " has no header row");
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) t.columns.push_back(cell);

    std::size_t lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        while (std::getline(ss, cell, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;  // no conversion; report below with file and line
            }
            if (cell.empty() || used != cell.size())
                throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                         ": malformed number '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != t.columns.size())
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": row width does not match the column count");
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace amp
