#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hitsim {

/// Degree sequence of an undirected simple graph, in order of first
/// appearance of each node in the input.
struct DegreeSequence {
    std::vector<std::int64_t> degrees;
    std::string source_label;

    std::int64_t node_count() const { return static_cast<std::int64_t>(degrees.size()); }
};

/// Parse a whitespace-separated edge list ("u v" per line, '#' comments).
/// Directed inputs are symmetrized: degree = number of distinct neighbors.
/// Self-loops are ignored (the node still appears, possibly with degree 0);
/// duplicate edges count once. Malformed lines report their line number.
DegreeSequence parse_edge_list(std::istream& in, std::string label = "");

DegreeSequence load_edge_list(const std::filesystem::path& path);

}  // namespace hitsim
