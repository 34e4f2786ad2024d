#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trustroute/path.hpp"
#include "trustroute/propagation.hpp"
#include "trustroute/topology.hpp"
#include "trustroute/trust.hpp"

namespace trustroute {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// All simple source-to-destination paths, depth first, with neighbours visited in
/// declaration order. On a layered mesh the first layer varies slowest.
/// Throws CapExceeded once more than `cap` paths are found.
std::vector<Path> enumerate_paths(const Topology& t, std::size_t cap = kDefaultPathCap);

double path_mean_trust(const Topology& t, const Path& p);
double path_mean_untrust(const Topology& t, const Path& p);

struct RankedPath {
    Path path;
    double mean_trust = 0.0;
    double mean_untrust = 0.0;
    TrustClass trust_class = TrustClass::VeryLow;
    std::size_t rank = 0;               // 1-based
    std::size_t enumeration_index = 0;  // 1-based position in enumerate_paths order
    bool confidential = false;          // trust test, edge chaining
};

/// Every path ordered by mean trust (descending), then mean untrust (ascending),
/// then enumeration index.
std::vector<RankedPath> rank_paths(const Topology& t, const ModelConstants& c,
                                   std::size_t cap = kDefaultPathCap);

struct RouteHop {
    std::size_t from = 0;
    std::size_t to = 0;
    TrustPair edge;
    HopResult result;
};

struct RouteResult {
    Path path;  // full route when reached, otherwise the partial walk
    std::vector<RouteHop> hops;
    bool reached = false;
    std::optional<std::size_t> stuck_at;  // set on a dead end
};

/// Greedy walk from the source: at each node take the highest-trust edge to an
/// unvisited node whose trust-test hop is Acceptable (edge chaining); ties go to
/// the earlier-declared node. A dead end is reported through `reached`/`stuck_at`.
/// Throws TopologyError if the topology has no source/destination.
RouteResult most_likely_route(const Topology& t, const ModelConstants& c);

} // namespace trustroute
