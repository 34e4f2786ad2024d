#include "trustroute/path.hpp"

#include <string>
#include <vector>

#include "trustroute/errors.hpp"

namespace trustroute {

std::string to_string(const Topology& t, const Path& p, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (i > 0) out += sep;
        out += t.name(p.nodes[i]);
    }
    return out;
}

Path path_from_names(const Topology& t, const std::vector<std::string>& names) {
    Path p;
    p.nodes.reserve(names.size());
    for (const auto& n : names) p.nodes.push_back(t.require(n));
    return p;
}

Path parse_path_spec(const Topology& t, std::string_view spec) {
    std::vector<std::string> names;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = spec.find(',', start);
        std::string_view part = spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start);
        while (!part.empty() && (part.front() == ' ' || part.front() == '\t')) part.remove_prefix(1);
        while (!part.empty() && (part.back() == ' ' || part.back() == '\t')) part.remove_suffix(1);
        if (part.empty()) throw TopologyError("empty node name in path '" + std::string(spec) + "'");
        names.emplace_back(part);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return path_from_names(t, names);
}

void validate_path(const Topology& t, const Path& p) {
    if (p.nodes.size() < 2) throw TopologyError("path needs at least two nodes");
    for (std::size_t n : p.nodes) {
        if (n >= t.node_count()) throw TopologyError("path references an unknown node");
    }
    if (p.nodes.front() != t.source()) {
        throw TopologyError("path starts at '" + t.name(p.nodes.front()) + "', not at source '" +
                            t.name(t.source()) + "'");
    }
    if (p.nodes.back() != t.destination()) {
        throw TopologyError("path ends at '" + t.name(p.nodes.back()) + "', not at destination '" +
                            t.name(t.destination()) + "'");
    }
    std::vector<bool> seen(t.node_count(), false);
    for (std::size_t n : p.nodes) {
        if (seen[n]) throw TopologyError("path repeats node '" + t.name(n) + "'");
        seen[n] = true;
    }
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        if (!t.edge(p.nodes[i], p.nodes[i + 1])) {
            throw TopologyError("no such edge " + t.name(p.nodes[i]) + " -> " + t.name(p.nodes[i + 1]));
        }
    }
}

std::vector<TrustPair> path_edges(const Topology& t, const Path& p) {
    validate_path(t, p);
    std::vector<TrustPair> pairs;
    pairs.reserve(p.edge_count());
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        pairs.push_back(*t.edge(p.nodes[i], p.nodes[i + 1]));
    }
    return pairs;
}

} // namespace trustroute
