#include <gtest/gtest.h>

#include <random>

#include "support/random_topology.hpp"
#include "trustroute/errors.hpp"
#include "trustroute/path.hpp"
#include "trustroute/propagation.hpp"
#include "trustroute/topology.hpp"

namespace trustroute {
namespace {

constexpr double kTol = 1e-12;
const ModelConstants kDefaults{};

void expect_matrix(const Matrix2& m, double a, double b, double c, double d) {
    EXPECT_NEAR(m[0][0], a, kTol);
    EXPECT_NEAR(m[0][1], b, kTol);
    EXPECT_NEAR(m[1][0], c, kTol);
    EXPECT_NEAR(m[1][1], d, kTol);
}

void expect_hop(const HopResult& h, double ft, double fu, Verdict v) {
    EXPECT_NEAR(h.f_trust, ft, kTol);
    EXPECT_NEAR(h.f_untrust, fu, kTol);
    EXPECT_EQ(h.verdict, v);
}

TEST(Matrices, TrustMatrix) {
    expect_matrix(trust_matrix({0.95, 0.05}, kDefaults), 0.51, 0.05, 1.00, 0.50);
    expect_matrix(trust_matrix({0.9, 0.1}, kDefaults), 0.51, 0.10, 1.00, 0.50);
    expect_matrix(trust_matrix({1, 0}, kDefaults), 0.51, 0.0, 1.00, 0.50);
}

TEST(Matrices, UntrustMatrix) {
    expect_matrix(untrust_matrix({0.95, 0.05}, kDefaults), 0.49, 0.95, 0.00, 0.50);
    expect_matrix(untrust_matrix({0.6, 0.4}, kDefaults), 0.49, 0.60, 0.00, 0.50);
    expect_matrix(untrust_matrix({0, 1}, kDefaults), 0.49, 0.0, 0.00, 0.50);
}

TEST(Matrices, ConstantsAreInjected) {
    ModelConstants c;
    c.theta_min = 0.6;
    c.theta_ind = 0.4;
    expect_matrix(trust_matrix({0.9, 0.1}, c), 0.6, 0.1, 1.0, 0.4);
}

TEST(TrustHop, WorkedChain) {
    expect_hop(propagate_trust_hop({1, 0}, {0.95, 0.05}, kDefaults), 0.51, 0.05, Verdict::Acceptable);
    // 0.95*0.51 + 0.05*1 and 0.95*0.4 + 0.05*0.5
    expect_hop(propagate_trust_hop({0.95, 0.05}, {0.6, 0.4}, kDefaults), 0.5345, 0.405, Verdict::Acceptable);
    expect_hop(propagate_trust_hop({0.6, 0.4}, {0.9, 0.1}, kDefaults), 0.706, 0.26, Verdict::Acceptable);
    expect_hop(propagate_trust_hop({0.9, 0.1}, {0.8, 0.2}, kDefaults), 0.559, 0.23, Verdict::Acceptable);
}

TEST(UntrustHop, WorkedChain) {
    // Components reported as (f_trust, f_untrust); the printed vectors are [f_untrust f_trust].
    expect_hop(propagate_untrust_hop({1, 0}, {0.95, 0.05}, kDefaults), 0.50, 0.0, Verdict::Acceptable);
    expect_hop(propagate_untrust_hop({0.95, 0.05}, {0.6, 0.4}, kDefaults), 0.505, 0.0245, Verdict::Acceptable);
    expect_hop(propagate_untrust_hop({0.6, 0.4}, {0.9, 0.1}, kDefaults), 0.66, 0.196, Verdict::Acceptable);
    expect_hop(propagate_untrust_hop({0.9, 0.1}, {0.8, 0.2}, kDefaults), 0.53, 0.049, Verdict::Acceptable);
}

TEST(Verdicts, ComparisonRule) {
    EXPECT_EQ(judge(0.6, 0.4), Verdict::Acceptable);
    EXPECT_EQ(judge(0.4, 0.6), Verdict::NotAcceptable);
    EXPECT_EQ(judge(0.5, 0.5), Verdict::Indifferent);
    EXPECT_EQ(judge(0.5, 0.5 + 1e-13), Verdict::Indifferent);
    EXPECT_EQ(judge(0.5, 0.5 + 1e-11), Verdict::NotAcceptable);
    // Full untrust on the first edge: F_T = 0.51 < F_U = 1.
    EXPECT_EQ(propagate_trust_hop({1, 0}, {0, 1}, kDefaults).verdict, Verdict::NotAcceptable);
    // F_T = 0.51, F_U = 0.51
    EXPECT_EQ(propagate_trust_hop({1, 0}, {0.49, 0.51}, kDefaults).verdict, Verdict::Indifferent);
}

TEST(TrustHop, FirstColumnIdentity) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 2000; ++i) {
        const TrustPair arrival = testing::random_complementary(rng);
        const TrustPair edge = testing::random_complementary(rng);
        const HopResult h = propagate_trust_hop(arrival, edge, kDefaults);
        EXPECT_NEAR(h.f_trust, 0.51 + 0.49 * arrival.untrust, kTol);
        EXPECT_GE(h.f_trust, 0.51 - kTol);
        EXPECT_LE(h.f_trust, 1.0 + kTol);
    }
}

TEST(UntrustHop, UntrustComponentBounded) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 2000; ++i) {
        const TrustPair arrival = testing::random_complementary(rng);
        const TrustPair edge = testing::random_complementary(rng);
        const HopResult h = propagate_untrust_hop(arrival, edge, kDefaults);
        EXPECT_NEAR(h.f_untrust, 0.49 * arrival.untrust, kTol);
        EXPECT_LE(h.f_untrust, 0.49 + kTol);
    }
}

class FixturePath : public ::testing::Test {
protected:
    Topology fixture = paper_fixture();
    Path p36 = parse_path_spec(fixture, "S,3,7,11,D");
};

TEST_F(FixturePath, TrustTestEdgeChaining) {
    const PathEvaluation e = evaluate_path(fixture, p36, kDefaults);
    ASSERT_EQ(e.hops.size(), 4u);
    expect_hop(e.hops[0], 0.51, 0.05, Verdict::Acceptable);
    expect_hop(e.hops[1], 0.5345, 0.405, Verdict::Acceptable);
    expect_hop(e.hops[2], 0.706, 0.26, Verdict::Acceptable);
    expect_hop(e.hops[3], 0.559, 0.23, Verdict::Acceptable);
    EXPECT_TRUE(e.confidential);
    EXPECT_EQ(e.mode, TestMode::Trust);
}

TEST_F(FixturePath, UntrustTestEdgeChaining) {
    const PathEvaluation e = evaluate_path(fixture, p36, kDefaults, TestMode::Untrust);
    ASSERT_EQ(e.hops.size(), 4u);
    expect_hop(e.hops[0], 0.50, 0.0, Verdict::Acceptable);
    expect_hop(e.hops[1], 0.505, 0.0245, Verdict::Acceptable);
    expect_hop(e.hops[2], 0.66, 0.196, Verdict::Acceptable);
    expect_hop(e.hops[3], 0.53, 0.049, Verdict::Acceptable);
    EXPECT_TRUE(e.confidential);
}

// Frozen from a numpy row-vector x matrix product chain (v <- v @ M_k).
TEST_F(FixturePath, TrustTestOutputChaining) {
    const PathEvaluation e = evaluate_path(fixture, p36, kDefaults, TestMode::Trust, Chaining::Output);
    ASSERT_EQ(e.hops.size(), 4u);
    expect_hop(e.hops[0], 0.51, 0.05, Verdict::Acceptable);
    expect_hop(e.hops[1], 0.3101, 0.229, Verdict::Acceptable);
    expect_hop(e.hops[2], 0.387151, 0.14551, Verdict::Acceptable);
    expect_hop(e.hops[3], 0.34295701, 0.1501852, Verdict::Acceptable);
}

TEST_F(FixturePath, UntrustTestOutputChaining) {
    const PathEvaluation e = evaluate_path(fixture, p36, kDefaults, TestMode::Untrust, Chaining::Output);
    ASSERT_EQ(e.hops.size(), 4u);
    expect_hop(e.hops[0], 0.5, 0.0, Verdict::Acceptable);
    expect_hop(e.hops[1], 0.25, 0.0, Verdict::Acceptable);
    expect_hop(e.hops[2], 0.125, 0.0, Verdict::Acceptable);
    expect_hop(e.hops[3], 0.0625, 0.0, Verdict::Acceptable);
}

TEST_F(FixturePath, Errors) {
    EXPECT_THROW(parse_path_spec(fixture, "S,3,99,D"), TopologyError);
    EXPECT_THROW(evaluate_path(fixture, parse_path_spec(fixture, "S,D"), kDefaults), TopologyError);
    EXPECT_THROW(evaluate_path(fixture, parse_path_spec(fixture, "3,7,11,D"), kDefaults), TopologyError);
    EXPECT_THROW(evaluate_path(fixture, parse_path_spec(fixture, "S,3,7,11"), kDefaults), TopologyError);
    EXPECT_THROW(evaluate_path(fixture, Path{}, kDefaults), TopologyError);
}

TEST(EvaluatePath, SingleEdge) {
    const Topology t = parse_topology("node S\nnode D\nsource S\ndest D\nedge S D 1 0\n");
    const PathEvaluation e = evaluate_path(t, Path{{0, 1}}, kDefaults);
    ASSERT_EQ(e.hops.size(), 1u);
    expect_hop(e.hops[0], 0.51, 0.0, Verdict::Acceptable);
    EXPECT_TRUE(e.confidential);
}

TEST(EvaluatePath, NotConfidentialWhenAnyHopFails) {
    const Topology t = parse_topology("node S\nnode a\nnode D\nsource S\ndest D\nedge S a 0.9\nedge a D 0.05\n");
    // Hop 2: arrival (0.9, 0.1): F_T = 0.559, F_U = 0.9*0.95 + 0.05 = 0.905
    const PathEvaluation e = evaluate_path(t, Path{{0, 1, 2}}, kDefaults);
    EXPECT_EQ(e.hops[0].verdict, Verdict::Acceptable);
    EXPECT_EQ(e.hops[1].verdict, Verdict::NotAcceptable);
    EXPECT_FALSE(e.confidential);
}

TEST(EvaluatePath, MatchesHopByHopComposition) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const std::array<TrustPair, 3> pairs{testing::random_complementary(rng),
                                             testing::random_complementary(rng),
                                             testing::random_complementary(rng)};
        Topology t;
        for (const char* id : {"S", "a", "b", "D"}) t.add_node(id);
        t.set_source("S");
        t.set_destination("D");
        t.add_edge("S", "a", pairs[0]);
        t.add_edge("a", "b", pairs[1]);
        t.add_edge("b", "D", pairs[2]);

        const PathEvaluation e = evaluate_path(t, Path{{0, 1, 2, 3}}, kDefaults);
        ASSERT_EQ(e.hops.size(), 3u);
        // Manual chain: arrival for hop k is the pair of edge k-1.
        const std::array<TrustPair, 3> arrivals{kMaxTrust, pairs[0], pairs[1]};
        bool all = true;
        for (std::size_t k = 0; k < 3; ++k) {
            const double ft = arrivals[k].trust * 0.51 + arrivals[k].untrust * 1.0;
            const double fu = arrivals[k].trust * pairs[k].untrust + arrivals[k].untrust * 0.5;
            EXPECT_EQ(e.hops[k].f_trust, ft);
            EXPECT_EQ(e.hops[k].f_untrust, fu);
            all = all && ft - fu > 1e-12;
        }
        EXPECT_EQ(e.confidential, all);

        const PathEvaluation again = evaluate_path(t, Path{{0, 1, 2, 3}}, kDefaults);
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_EQ(again.hops[k].f_trust, e.hops[k].f_trust);
            EXPECT_EQ(again.hops[k].f_untrust, e.hops[k].f_untrust);
        }
    }
}

} // namespace
} // namespace trustroute
