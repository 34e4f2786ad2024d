#include "trustroute/pathing.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "trustroute/errors.hpp"

namespace trustroute {

std::vector<Path> enumerate_paths(const Topology& t, std::size_t cap) {
    t.validate();
    const std::size_t src = t.source();
    const std::size_t dst = t.destination();

    std::vector<Path> paths;
    std::vector<bool> on_path(t.node_count(), false);
    Path current{{src}};
    on_path[src] = true;

    // Each frame remembers which out-edge to try next.
    std::vector<std::size_t> next_edge{0};
    while (!next_edge.empty()) {
        const std::size_t node = current.nodes.back();
        const auto out = t.out_edges(node);
        std::size_t& k = next_edge.back();

        if (node == dst || k >= out.size()) {
            if (node == dst) {
                if (paths.size() == cap) throw CapExceeded(cap);
                paths.push_back(current);
            }
            on_path[node] = false;
            current.nodes.pop_back();
            next_edge.pop_back();
            continue;
        }

        const std::size_t to = out[k++].to;
        if (on_path[to]) continue;
        on_path[to] = true;
        current.nodes.push_back(to);
        next_edge.push_back(0);
    }
    return paths;
}

namespace {

template <class Proj>
double path_mean(const Topology& t, const Path& p, Proj proj) {
    const std::vector<TrustPair> edges = path_edges(t, p);
    double sum = 0.0;
    for (const TrustPair& e : edges) sum += proj(e);
    return sum / static_cast<double>(edges.size());
}

} // namespace

double path_mean_trust(const Topology& t, const Path& p) {
    return path_mean(t, p, [](const TrustPair& e) { return e.trust; });
}

double path_mean_untrust(const Topology& t, const Path& p) {
    return path_mean(t, p, [](const TrustPair& e) { return e.untrust; });
}

std::vector<RankedPath> rank_paths(const Topology& t, const ModelConstants& c, std::size_t cap) {
    std::vector<Path> paths = enumerate_paths(t, cap);

    std::vector<RankedPath> ranked;
    ranked.reserve(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        RankedPath r;
        r.mean_trust = path_mean_trust(t, paths[i]);
        r.mean_untrust = path_mean_untrust(t, paths[i]);
        r.trust_class = classify(std::clamp(r.mean_trust, 0.0, 1.0));
        r.enumeration_index = i + 1;
        r.confidential = evaluate_path(t, paths[i], c, TestMode::Trust, Chaining::Edge).confidential;
        r.path = std::move(paths[i]);
        ranked.push_back(std::move(r));
    }

    std::sort(ranked.begin(), ranked.end(), [](const RankedPath& a, const RankedPath& b) {
        if (a.mean_trust != b.mean_trust) return a.mean_trust > b.mean_trust;
        if (a.mean_untrust != b.mean_untrust) return a.mean_untrust < b.mean_untrust;
        return a.enumeration_index < b.enumeration_index;
    });
    for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].rank = i + 1;
    return ranked;
}

RouteResult most_likely_route(const Topology& t, const ModelConstants& c) {
    t.validate();
    const std::size_t dst = t.destination();

    RouteResult route;
    std::vector<bool> visited(t.node_count(), false);
    std::size_t node = t.source();
    TrustPair arrival = kMaxTrust;
    route.path.nodes.push_back(node);
    visited[node] = true;

    while (node != dst) {
        const Edge* best = nullptr;
        HopResult best_hop;
        for (const Edge& e : t.out_edges(node)) {
            if (visited[e.to]) continue;
            const HopResult hop = propagate_trust_hop(arrival, e.pair, c);
            if (hop.verdict != Verdict::Acceptable) continue;
            // out_edges is in declaration order, so strict > keeps the earliest on ties.
            if (best == nullptr || e.pair.trust > best->pair.trust) {
                best = &e;
                best_hop = hop;
            }
        }
        if (best == nullptr) {
            route.stuck_at = node;
            return route;
        }
        route.hops.push_back({node, best->to, best->pair, best_hop});
        route.path.nodes.push_back(best->to);
        visited[best->to] = true;
        arrival = best->pair;
        node = best->to;
    }
    route.reached = true;
    return route;
}

} // namespace trustroute
