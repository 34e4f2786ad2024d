#include "trustroute/sim.hpp"

#include "trustroute/errors.hpp"
#include "trustroute/pathing.hpp"

namespace trustroute {

SimReport simulate(const Topology& t, std::size_t packets, const ModelConstants& c) {
    if (packets == 0) throw Error("simulate needs at least one packet");
    t.validate();

    SimReport report;
    for (std::size_t i = 0; i < packets; ++i) {
        const RouteResult walk = most_likely_route(t, c);
        ++report.packets_sent;
        if (walk.reached) {
            ++report.delivered;
            ++report.route_usage[walk.path];
        } else {
            ++report.dropped;
            ++report.drop_points[t.name(*walk.stuck_at)];
        }
    }
    return report;
}

} // namespace trustroute
