#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "trustroute/path.hpp"
#include "trustroute/topology.hpp"
#include "trustroute/trust.hpp"

namespace trustroute {

using Matrix2 = std::array<std::array<double, 2>, 2>;

inline constexpr double kVerdictTolerance = 1e-12;

enum class Verdict { Acceptable, NotAcceptable, Indifferent };
enum class TestMode { Trust, Untrust };

// EdgeChaining feeds the previous edge's pair into the next hop, which is how the
// worked example is computed. OutputChaining feeds the previous hop's output vector.
enum class Chaining { Edge, Output };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(TestMode m) noexcept;
std::string_view to_string(Chaining c) noexcept;

struct HopResult {
    double f_trust = 0.0;
    double f_untrust = 0.0;
    Verdict verdict = Verdict::Indifferent;
};

struct PathEvaluation {
    Path path;
    std::vector<HopResult> hops;
    TestMode mode = TestMode::Trust;
    Chaining chaining = Chaining::Edge;
    bool confidential = false;  // every hop Acceptable
};

// Acceptable iff f_trust > f_untrust, NotAcceptable iff smaller, else Indifferent.
Verdict judge(double f_trust, double f_untrust) noexcept;

// [[theta_min, U_next], [theta_max, theta_ind]]
Matrix2 trust_matrix(TrustPair next_edge, const ModelConstants& c) noexcept;
// [[upsilon_min, T_next], [upsilon_max, upsilon_ind]]
Matrix2 untrust_matrix(TrustPair next_edge, const ModelConstants& c) noexcept;

/// Trust test for one hop: the row vector [T U] of `arrival` times trust_matrix(next_edge).
HopResult propagate_trust_hop(TrustPair arrival, TrustPair next_edge, const ModelConstants& c) noexcept;

/// Untrust test for one hop: `arrival` is read as the row vector [U T] and multiplied
/// by untrust_matrix(next_edge). The first product component lands in f_untrust and
/// the second in f_trust; the verdict uses the same comparison as the trust test.
HopResult propagate_untrust_hop(TrustPair arrival, TrustPair next_edge, const ModelConstants& c) noexcept;

/// Runs the per-hop test along a path. The first hop always starts from full trust
/// at the source. Throws TopologyError if the path is not a valid S->D path.
PathEvaluation evaluate_path(const Topology& t, const Path& p, const ModelConstants& c,
                             TestMode mode = TestMode::Trust, Chaining chaining = Chaining::Edge);

} // namespace trustroute
