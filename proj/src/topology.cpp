#include "trustroute/topology.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>
#include <system_error>

#include "trustroute/errors.hpp"

namespace trustroute {

namespace {

bool valid_id(std::string_view id) noexcept {
    if (id.empty()) return false;
    return std::none_of(id.begin(), id.end(), [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f' ||
               ch == '#' || ch == ',';
    });
}

} // namespace

std::size_t Topology::add_node(const NodeId& id) {
    if (!valid_id(id)) {
        throw TopologyError("invalid node id '" + id + "'");
    }
    if (index_.contains(id)) {
        throw TopologyError("duplicate node '" + id + "'");
    }
    const std::size_t idx = nodes_.size();
    nodes_.push_back(id);
    index_.emplace(id, idx);
    adjacency_.emplace_back();
    return idx;
}

void Topology::add_edge(const NodeId& from, const NodeId& to, TrustPair pair) {
    const std::size_t a = require(from);
    const std::size_t b = require(to);
    if (a == b) {
        throw TopologyError("self-loop on node '" + from + "'");
    }
    auto& out = adjacency_[a];
    auto pos = std::lower_bound(out.begin(), out.end(), b,
                                [](const Edge& e, std::size_t target) { return e.to < target; });
    if (pos != out.end() && pos->to == b) {
        throw TopologyError("duplicate edge " + from + " -> " + to);
    }
    out.insert(pos, Edge{b, pair});
    ++edge_count_;
}

void Topology::set_source(const NodeId& id) { source_ = require(id); }

void Topology::set_destination(const NodeId& id) { destination_ = require(id); }

void Topology::validate() const {
    if (!source_) throw TopologyError("topology has no source");
    if (!destination_) throw TopologyError("topology has no destination");
    if (*source_ == *destination_) {
        throw TopologyError("source and destination are both '" + nodes_[*source_] + "'");
    }
}

std::optional<std::size_t> Topology::index_of(std::string_view id) const {
    if (auto it = index_.find(id); it != index_.end()) return it->second;
    return std::nullopt;
}

std::size_t Topology::require(std::string_view id) const {
    if (auto idx = index_of(id)) return *idx;
    throw TopologyError("unknown node '" + std::string(id) + "'");
}

std::size_t Topology::source() const {
    if (!source_) throw TopologyError("topology has no source");
    return *source_;
}

std::size_t Topology::destination() const {
    if (!destination_) throw TopologyError("topology has no destination");
    return *destination_;
}

std::optional<TrustPair> Topology::edge(std::size_t from, std::size_t to) const {
    if (from >= adjacency_.size()) return std::nullopt;
    const auto& out = adjacency_[from];
    auto pos = std::lower_bound(out.begin(), out.end(), to,
                                [](const Edge& e, std::size_t target) { return e.to < target; });
    if (pos != out.end() && pos->to == to) return pos->pair;
    return std::nullopt;
}

bool operator==(const Topology& a, const Topology& b) {
    return a.nodes_ == b.nodes_ && a.source_ == b.source_ && a.destination_ == b.destination_ &&
           a.adjacency_ == b.adjacency_;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

double parse_number(const Line& line, std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::fixed);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError(line.number, std::string(token), "expected a decimal number");
    }
    return value;
}

void expect_arity(const Line& line, std::size_t min, std::size_t max) {
    const std::size_t n = line.tokens.size() - 1;
    if (n < min || n > max) {
        const std::string expected =
            min == max ? std::to_string(min) : std::to_string(min) + "-" + std::to_string(max);
        throw ParseError(line.number, std::string(line.tokens.front()),
                         "expected " + expected + " argument(s), got " + std::to_string(n));
    }
}

} // namespace

TopologyDocument parse_document(std::string_view text, PairPolicy policy) {
    // A UTF-8 byte order mark is tolerated.
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    const std::vector<Line> lines = tokenize(text);
    TopologyDocument doc;
    Topology& t = doc.topology;

    // Nodes first: other declarations may reference nodes declared later in the file.
    for (const Line& line : lines) {
        const std::string_view kw = line.tokens.front();
        if (kw == "node") {
            expect_arity(line, 1, 1);
            const std::string id(line.tokens[1]);
            if (t.index_of(id)) {
                throw ParseError(line.number, id,
                                 "duplicate node (first declared on line " +
                                     std::to_string(doc.node_lines.at(id)) + ")");
            }
            if (!valid_id(id)) throw ParseError(line.number, id, "invalid node id");
            t.add_node(id);
            doc.node_lines.emplace(id, line.number);
        } else if (kw != "source" && kw != "dest" && kw != "edge") {
            throw ParseError(line.number, std::string(kw), "unknown declaration");
        }
    }

    auto node_ref = [&](const Line& line, std::string_view token) {
        if (!t.index_of(token)) throw ParseError(line.number, std::string(token), "unknown node");
        return std::string(token);
    };

    for (const Line& line : lines) {
        const std::string_view kw = line.tokens.front();
        if (kw == "source" || kw == "dest") {
            expect_arity(line, 1, 1);
            const std::string id = node_ref(line, line.tokens[1]);
            std::size_t& seen = kw == "source" ? doc.source_line : doc.destination_line;
            if (seen != 0) {
                throw ParseError(line.number, std::string(kw),
                                 "repeated declaration (first on line " + std::to_string(seen) + ")");
            }
            seen = line.number;
            if (kw == "source") t.set_source(id); else t.set_destination(id);
        } else if (kw == "edge") {
            expect_arity(line, 3, 4);
            const std::string from = node_ref(line, line.tokens[1]);
            const std::string to = node_ref(line, line.tokens[2]);
            const double trust = parse_number(line, line.tokens[3]);
            std::optional<double> untrust;
            if (line.tokens.size() == 5) untrust = parse_number(line, line.tokens[4]);

            TrustPair pair;
            try {
                pair = make_pair(trust, untrust, policy);
            } catch (const ValueError& e) {
                const std::string_view bad =
                    (trust < 0.0 || trust > 1.0 || !untrust) ? line.tokens[3] : line.tokens[4];
                throw ParseError(line.number, std::string(bad), e.what());
            }
            if (from == to) throw ParseError(line.number, from, "self-loop");
            const auto key = std::make_pair(from, to);
            if (auto it = doc.edge_lines.find(key); it != doc.edge_lines.end()) {
                throw ParseError(line.number, from + " " + to,
                                 "duplicate edge (first declared on line " +
                                     std::to_string(it->second) + ")");
            }
            t.add_edge(from, to, pair);
            doc.edge_lines.emplace(key, line.number);
        }
    }

    const std::size_t last_line = lines.empty() ? 1 : lines.back().number;
    if (doc.source_line == 0) throw ParseError(last_line, "", "missing 'source' declaration");
    if (doc.destination_line == 0) throw ParseError(last_line, "", "missing 'dest' declaration");
    if (t.source() == t.destination()) {
        throw ParseError(doc.destination_line, t.name(t.destination()),
                         "source and destination must differ");
    }
    return doc;
}

Topology parse_topology(std::string_view text, PairPolicy policy) {
    return parse_document(text, policy).topology;
}

std::string format_number(double value) {
    // Fixed notation so the parser (decimal only) can read it back; values in [0,1]
    // need at most a few hundred digits.
    std::array<char, 1100> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed);
    if (ec != std::errc{}) throw ValueError("number too large to format");
    return std::string(buf.data(), end);
}

std::string serialize_topology(const Topology& t) {
    std::string out;
    for (const auto& id : t.nodes()) out += "node " + id + "\n";
    if (t.has_endpoints()) {
        out += "source " + t.name(t.source()) + "\n";
        out += "dest " + t.name(t.destination()) + "\n";
    }
    for (std::size_t from = 0; from < t.node_count(); ++from) {
        for (const Edge& e : t.out_edges(from)) {
            out += "edge " + t.name(from) + " " + t.name(e.to) + " " + format_number(e.pair.trust) +
                   " " + format_number(e.pair.untrust) + "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

Topology layered(std::span<const std::size_t> layer_sizes, TrustPair pair) {
    if (layer_sizes.empty()) throw TopologyError("mesh needs at least one layer");
    Topology t;
    t.add_node("S");
    std::vector<std::vector<NodeId>> layers;
    std::size_t next = 1;
    for (std::size_t size : layer_sizes) {
        if (size == 0) throw TopologyError("mesh layer sizes must be positive");
        auto& layer = layers.emplace_back();
        for (std::size_t i = 0; i < size; ++i) {
            layer.push_back(std::to_string(next++));
            t.add_node(layer.back());
        }
    }
    t.add_node("D");
    t.set_source("S");
    t.set_destination("D");

    std::vector<NodeId> prev{"S"};
    for (const auto& layer : layers) {
        for (const auto& a : prev)
            for (const auto& b : layer) t.add_edge(a, b, pair);
        prev = layer;
    }
    for (const auto& a : prev) t.add_edge(a, "D", pair);
    return t;
}

} // namespace

Topology generate_mesh(std::span<const std::size_t> layer_sizes, TrustPair pair) {
    return layered(layer_sizes, pair);
}

Topology paper_fixture() {
    constexpr std::array<std::size_t, 3> shape{4, 3, 4};
    const Topology mesh = layered(shape, TrustPair{0.5, 0.5});

    // Rebuild with the printed values substituted; edge order is irrelevant to equality.
    const std::map<std::pair<std::string, std::string>, TrustPair> known{
        {{"S", "3"}, {0.95, 0.05}},
        {{"3", "7"}, {0.6, 0.4}},
        {{"7", "11"}, {0.9, 0.1}},
        {{"11", "D"}, {0.8, 0.2}},
        {{"S", "1"}, {0.8, 0.2}},
        {{"1", "7"}, {0.8, 0.2}},
    };
    Topology t;
    for (const auto& id : mesh.nodes()) t.add_node(id);
    t.set_source("S");
    t.set_destination("D");
    for (std::size_t from = 0; from < mesh.node_count(); ++from) {
        for (const Edge& e : mesh.out_edges(from)) {
            const auto key = std::make_pair(mesh.name(from), mesh.name(e.to));
            auto it = known.find(key);
            t.add_edge(key.first, key.second, it != known.end() ? it->second : e.pair);
        }
    }
    return t;
}

} // namespace trustroute
