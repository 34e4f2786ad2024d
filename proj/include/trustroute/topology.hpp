#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trustroute/trust.hpp"

namespace trustroute {

using NodeId = std::string;

struct Edge {
    std::size_t to = 0;  // declaration index of the target node
    TrustPair pair;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed trust graph with a designated source and destination.
// Nodes keep their declaration order; every tie-break in the library uses it.
class Topology {
public:
    Topology() = default;

    // Returns the declaration index. Throws TopologyError on an invalid or duplicate id.
    std::size_t add_node(const NodeId& id);
    // Throws TopologyError on unknown endpoints, self-loops or a duplicate ordered pair.
    void add_edge(const NodeId& from, const NodeId& to, TrustPair pair);
    void set_source(const NodeId& id);
    void set_destination(const NodeId& id);

    // Checks that source and destination are set and distinct.
    void validate() const;

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
    const NodeId& name(std::size_t index) const { return nodes_.at(index); }
    std::optional<std::size_t> index_of(std::string_view id) const;
    // Throws TopologyError if the id is not declared.
    std::size_t require(std::string_view id) const;

    std::size_t source() const;
    std::size_t destination() const;
    bool has_endpoints() const noexcept { return source_.has_value() && destination_.has_value(); }

    // Outgoing edges of a node, ordered by target declaration index.
    std::span<const Edge> out_edges(std::size_t node) const { return adjacency_.at(node); }
    std::optional<TrustPair> edge(std::size_t from, std::size_t to) const;

    friend bool operator==(const Topology& a, const Topology& b);

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::vector<NodeId> nodes_;
    std::unordered_map<NodeId, std::size_t, Hash, std::equal_to<>> index_;
    std::vector<std::vector<Edge>> adjacency_;
    std::size_t edge_count_ = 0;
    std::optional<std::size_t> source_;
    std::optional<std::size_t> destination_;
};

// A parsed topology file plus the line on which each declaration appeared.
struct TopologyDocument {
    Topology topology;
    std::map<NodeId, std::size_t> node_lines;
    std::map<std::pair<NodeId, NodeId>, std::size_t> edge_lines;
    std::size_t source_line = 0;
    std::size_t destination_line = 0;
};

TopologyDocument parse_document(std::string_view text, PairPolicy policy = {});

// Throws ParseError (with line number and token) for any malformed or invalid input.
Topology parse_topology(std::string_view text, PairPolicy policy = {});

// Canonical text form: nodes, source/dest, then edges by (from, to) declaration order.
std::string serialize_topology(const Topology& t);

// Shortest decimal form that reads back to the same double ("0.95", "1", "0.30000000000000004").
std::string format_number(double value);

// Source S, layers 1-4 / 5-7 / 8-11, destination D, full bipartite links between
// consecutive layers. Six edges carry the worked-example values; the rest hold (0.5, 0.5).
Topology paper_fixture();

// Layered mesh: S, nodes "1".."n" numbered layer by layer, D. Every edge carries `pair`.
Topology generate_mesh(std::span<const std::size_t> layer_sizes, TrustPair pair);

} // namespace trustroute
