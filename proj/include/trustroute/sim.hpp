#pragma once

#include <cstddef>
#include <map>

#include "trustroute/path.hpp"
#include "trustroute/topology.hpp"
#include "trustroute/trust.hpp"

namespace trustroute {

struct SimReport {
    std::size_t packets_sent = 0;
    std::size_t delivered = 0;
    std::size_t dropped = 0;
    std::map<Path, std::size_t> route_usage;
    std::map<NodeId, std::size_t> drop_points;

    friend bool operator==(const SimReport&, const SimReport&) = default;
};

// Forwards `packets` independent packets along the greedy route. Forwarding is
// deterministic, so every packet shares one outcome.
SimReport simulate(const Topology& t, std::size_t packets, const ModelConstants& c);

} // namespace trustroute
