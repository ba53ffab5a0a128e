#include "hitsim/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hitsim/errors.hpp"

namespace hitsim {

namespace {

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\r\n") != std::string::npos;
}

void write_field(std::ostream& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') out << '"';
        out << c;
    }
    out << '"';
}

// RFC-4180-ish field splitter; enough for our own headers and plain numbers.
std::vector<std::string> split_line(const std::string& line, std::int64_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (quoted)
        throw DataError("csv: unterminated quote on line " + std::to_string(line_no));
    fields.push_back(std::move(current));
    return fields;
}

}  // namespace

std::size_t ExperimentTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw DataError("table: no column named '" + name + "'");
}

void write_csv(const ExperimentTable& table, std::ostream& out) {
    if (table.columns.empty()) throw DataError("csv: table has no columns");
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        write_field(out, table.columns[i]);
    }
    out << '\n';

    char buf[64];
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != table.columns.size())
            throw DataError("csv: row " + std::to_string(r) + " has arity " +
                            std::to_string(row.size()) + ", expected " +
                            std::to_string(table.columns.size()));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (!std::isfinite(row[i]))
                throw DataError("csv: non-finite value in row " + std::to_string(r) +
                                ", column '" + table.columns[i] + "'");
            auto res = std::to_chars(buf, buf + sizeof(buf), row[i],
                                     std::chars_format::general, 17);
            out.write(buf, res.ptr - buf);
        }
        out << '\n';
    }
}

ExperimentTable read_csv(std::istream& in) {
    ExperimentTable table;
    std::string line;
    std::int64_t line_no = 0;
    if (!std::getline(in, line)) throw DataError("csv: missing header row");
    ++line_no;
    table.columns = split_line(line, line_no);
    if (table.columns.empty() || (table.columns.size() == 1 && table.columns[0].empty()))
        throw DataError("csv: empty header row");

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_line(line, line_no);
        if (fields.size() != table.columns.size())
            throw DataError("csv: line " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(table.columns.size()));
        std::vector<double> row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto& f = fields[i];
            auto res = std::from_chars(f.data(), f.data() + f.size(), row[i]);
            if (res.ec != std::errc{} || res.ptr != f.data() + f.size())
                throw DataError("csv: line " + std::to_string(line_no) + ", field " +
                                std::to_string(i + 1) + ": cannot parse '" + f + "'");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_table(const ExperimentTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("csv: cannot open " + path.string() + " for writing");
    write_csv(table, out);
    if (!out) throw DataError("csv: write failed for " + path.string());

    if (!table.metadata.is_null()) {
        const auto meta_path = path.string() + ".meta.json";
        std::ofstream meta(meta_path, std::ios::binary);
        if (!meta) throw DataError("csv: cannot open " + meta_path + " for writing");
        meta << table.metadata.dump(2) << '\n';
    }
}

ExperimentTable read_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("csv: cannot open " + path.string());
    auto table = read_csv(in);
    const auto meta_path = path.string() + ".meta.json";
    if (std::filesystem::exists(meta_path)) {
        std::ifstream meta(meta_path, std::ios::binary);
        meta >> table.metadata;
    }
    return table;
}

}  // namespace hitsim
