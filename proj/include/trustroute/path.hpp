#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "trustroute/topology.hpp"

namespace trustroute {

// Ordered node sequence from source to destination, by declaration index.
struct Path {
    std::vector<std::size_t> nodes;

    std::size_t edge_count() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

// Joins node names with the given separator, e.g. "S→3→7→11→D".
std::string to_string(const Topology& t, const Path& p, std::string_view sep = "→");

// Builds a path from a list of node names. Throws TopologyError on unknown names.
Path path_from_names(const Topology& t, const std::vector<std::string>& names);

// Parses a comma-separated node list such as "S,3,7,11,D".
Path parse_path_spec(const Topology& t, std::string_view spec);

/// Throws TopologyError unless the path starts at the source, ends at the
/// destination, repeats no node and follows existing edges.
void validate_path(const Topology& t, const Path& p);

// Edge pairs along a validated path, in hop order.
std::vector<TrustPair> path_edges(const Topology& t, const Path& p);

} // namespace trustroute
