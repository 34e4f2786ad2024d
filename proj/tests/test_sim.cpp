#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/random_topology.hpp"
#include "trustroute/errors.hpp"
#include "trustroute/pathing.hpp"
#include "trustroute/sim.hpp"

namespace trustroute {
namespace {

const ModelConstants kDefaults{};

SimReport scaled(const SimReport& r, std::size_t n) {
    SimReport out = r;
    out.packets_sent *= n;
    out.delivered *= n;
    out.dropped *= n;
    for (auto& [_, c] : out.route_usage) c *= n;
    for (auto& [_, c] : out.drop_points) c *= n;
    return out;
}

TEST(Simulate, FixtureDeliversOnTheGreedyRoute) {
    const Topology t = paper_fixture();
    const SimReport r = simulate(t, 100, kDefaults);
    EXPECT_EQ(r.packets_sent, 100u);
    EXPECT_EQ(r.delivered, 100u);
    EXPECT_EQ(r.dropped, 0u);
    ASSERT_EQ(r.route_usage.size(), 1u);
    EXPECT_EQ(to_string(t, r.route_usage.begin()->first), "S→3→7→11→D");
    EXPECT_EQ(r.route_usage.begin()->second, 100u);
    EXPECT_TRUE(r.drop_points.empty());
}

TEST(Simulate, BlockedAtSource) {
    const Topology t = parse_topology("node S\nnode a\nnode D\nsource S\ndest D\nedge S a 0.02\nedge a D 1\n");
    const SimReport r = simulate(t, 10, kDefaults);
    EXPECT_EQ(r.dropped, 10u);
    EXPECT_EQ(r.delivered, 0u);
    EXPECT_EQ(r.drop_points, (std::map<NodeId, std::size_t>{{"S", 10}}));
    EXPECT_TRUE(r.route_usage.empty());
}

TEST(Simulate, RejectsZeroPackets) {
    EXPECT_THROW(simulate(paper_fixture(), 0, kDefaults), Error);
}

TEST(Simulate, LinearDeterministicAndConsistentWithReplay) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::uniform_int_distribution<std::size_t> count(1, 50);
    for (int i = 0; i < 100; ++i) {
        const Topology t = testing::random_dag(rng, size(rng), 0.5);
        const std::size_t n = count(rng);
        const SimReport one = simulate(t, 1, kDefaults);
        const SimReport many = simulate(t, n, kDefaults);

        EXPECT_EQ(many, scaled(one, n));
        EXPECT_EQ(many, simulate(t, n, kDefaults));
        EXPECT_EQ(many.delivered + many.dropped, many.packets_sent);
        std::size_t used = 0;
        for (const auto& [p, c] : many.route_usage) {
            used += c;
            EXPECT_TRUE(evaluate_path(t, p, kDefaults).confidential);
        }
        EXPECT_EQ(used, many.delivered);

        // Replay a single walk independently.
        const testing::NaiveRoute walk = testing::naive_route(t);
        if (walk.reached) {
            ASSERT_EQ(many.route_usage.size(), 1u);
            EXPECT_EQ(many.route_usage.begin()->first.nodes, walk.nodes);
            EXPECT_EQ(many.delivered, n);
        } else {
            EXPECT_EQ(many.drop_points.at(t.name(walk.nodes.back())), n);
        }
    }
}

} // namespace
} // namespace trustroute
