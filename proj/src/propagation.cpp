#include "trustroute/propagation.hpp"

#include <cmath>

namespace trustroute {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Acceptable: return "Acceptable";
    case Verdict::NotAcceptable: return "NotAcceptable";
    case Verdict::Indifferent: return "Indifferent";
    }
    return "?";
}

std::string_view to_string(TestMode m) noexcept {
    return m == TestMode::Trust ? "trust" : "untrust";
}

std::string_view to_string(Chaining c) noexcept {
    return c == Chaining::Edge ? "edge" : "output";
}

Verdict judge(double f_trust, double f_untrust) noexcept {
    if (std::abs(f_trust - f_untrust) <= kVerdictTolerance) return Verdict::Indifferent;
    return f_trust > f_untrust ? Verdict::Acceptable : Verdict::NotAcceptable;
}

Matrix2 trust_matrix(TrustPair next_edge, const ModelConstants& c) noexcept {
    return {{{c.theta_min, next_edge.untrust}, {c.theta_max, c.theta_ind}}};
}

Matrix2 untrust_matrix(TrustPair next_edge, const ModelConstants& c) noexcept {
    return {{{c.upsilon_min, next_edge.trust}, {c.upsilon_max, c.upsilon_ind}}};
}

namespace {

// Row vector times 2x2 matrix.
std::array<double, 2> row_times(double a, double b, const Matrix2& m) noexcept {
    return {a * m[0][0] + b * m[1][0], a * m[0][1] + b * m[1][1]};
}

} // namespace

HopResult propagate_trust_hop(TrustPair arrival, TrustPair next_edge, const ModelConstants& c) noexcept {
    const auto [ft, fu] = row_times(arrival.trust, arrival.untrust, trust_matrix(next_edge, c));
    return {ft, fu, judge(ft, fu)};
}

HopResult propagate_untrust_hop(TrustPair arrival, TrustPair next_edge, const ModelConstants& c) noexcept {
    const auto [gu, gt] = row_times(arrival.untrust, arrival.trust, untrust_matrix(next_edge, c));
    return {gt, gu, judge(gt, gu)};
}

PathEvaluation evaluate_path(const Topology& t, const Path& p, const ModelConstants& c,
                             TestMode mode, Chaining chaining) {
    const std::vector<TrustPair> edges = path_edges(t, p);

    PathEvaluation eval{p, {}, mode, chaining, true};
    eval.hops.reserve(edges.size());

    TrustPair arrival = kMaxTrust;
    for (const TrustPair& edge : edges) {
        const HopResult hop = mode == TestMode::Trust ? propagate_trust_hop(arrival, edge, c)
                                                      : propagate_untrust_hop(arrival, edge, c);
        eval.hops.push_back(hop);
        if (hop.verdict != Verdict::Acceptable) eval.confidential = false;
        arrival = chaining == Chaining::Edge ? edge : TrustPair{hop.f_trust, hop.f_untrust};
    }
    return eval;
}

} // namespace trustroute
