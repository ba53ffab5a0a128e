#pragma once

#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace hitsim {

/// Rectangular numeric result table with a mandatory header row. Values are
/// written as decimals with 17 significant digits, so a write/read round
/// trip is lossless; non-finite values are rejected at write time.
struct ExperimentTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    nlohmann::json metadata;  // resolved config, seed, timestamp

    void append_row(std::initializer_list<double> values) {
        rows.emplace_back(values);
    }
    std::size_t column_index(const std::string& name) const;
    double at(std::size_t row, const std::string& column) const {
        return rows[row][column_index(column)];
    }
};

void write_csv(const ExperimentTable& table, std::ostream& out);
ExperimentTable read_csv(std::istream& in);

/// Writes the CSV and, when metadata is present, a `<path>.meta.json`
/// sidecar next to it (timestamps live in the sidecar so the CSV itself is
/// byte-reproducible).
void write_table(const ExperimentTable& table, const std::filesystem::path& path);
ExperimentTable read_table(const std::filesystem::path& path);

}  // namespace hitsim
