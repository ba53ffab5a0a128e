#include "hitsim/ingest.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hitsim/errors.hpp"

namespace hitsim {

DegreeSequence parse_edge_list(std::istream& in, std::string label) {
    std::unordered_map<std::uint64_t, std::unordered_set<std::uint64_t>> adjacency;
    std::vector<std::uint64_t> order;  // node ids by first appearance

    auto touch = [&](std::uint64_t id) -> std::unordered_set<std::uint64_t>& {
        auto [it, inserted] = adjacency.try_emplace(id);
        if (inserted) order.push_back(id);
        return it->second;
    };

    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;

        std::istringstream fields(line);
        std::uint64_t a = 0, b = 0;
        if (!(fields >> a >> b)) {
            throw DataError("edge list: malformed line " + std::to_string(line_no) + ": '" +
                            line + "'");
        }
        std::string trailing;
        if (fields >> trailing) {
            throw DataError("edge list: trailing tokens on line " + std::to_string(line_no) +
                            ": '" + line + "'");
        }
        auto& na = touch(a);
        auto& nb = touch(b);
        if (a == b) continue;  // self-loop
        na.insert(b);
        nb.insert(a);
    }

    DegreeSequence seq;
    seq.source_label = std::move(label);
    seq.degrees.reserve(order.size());
    for (std::uint64_t id : order)
        seq.degrees.push_back(static_cast<std::int64_t>(adjacency[id].size()));
    return seq;
}

DegreeSequence load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("edge list: cannot open " + path.string());
    return parse_edge_list(in, path.filename().string());
}

}  // namespace hitsim
