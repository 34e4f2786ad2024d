#include "trustroute/trust.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "trustroute/errors.hpp"

namespace trustroute {

namespace {

bool in_unit(double x) noexcept { return x >= 0.0 && x <= 1.0; }

std::string num(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return ec == std::errc{} ? std::string(buf.data(), end) : std::string("?");
}

} // namespace

std::string_view to_string(TrustClass c) noexcept {
    switch (c) {
    case TrustClass::VeryLow: return "VeryLow";
    case TrustClass::Low: return "Low";
    case TrustClass::Indifferent: return "Indifferent";
    case TrustClass::High: return "High";
    case TrustClass::VeryHigh: return "VeryHigh";
    }
    return "?";
}

std::string_view short_label(TrustClass c) noexcept {
    switch (c) {
    case TrustClass::VeryLow: return "VL";
    case TrustClass::Low: return "L";
    case TrustClass::Indifferent: return "I";
    case TrustClass::High: return "H";
    case TrustClass::VeryHigh: return "VH";
    }
    return "?";
}

void ModelConstants::validate() const {
    const std::array<std::pair<const char*, double>, 6> entries{{
        {"theta_min", theta_min},
        {"theta_max", theta_max},
        {"theta_ind", theta_ind},
        {"upsilon_min", upsilon_min},
        {"upsilon_max", upsilon_max},
        {"upsilon_ind", upsilon_ind},
    }};
    for (const auto& [name, value] : entries) {
        if (!in_unit(value)) {
            throw ValueError(std::string(name) + " = " + num(value) + " is outside [0,1]");
        }
    }
}

TrustPair make_pair(double trust, std::optional<double> untrust, PairPolicy policy) {
    if (!in_unit(trust)) {
        throw ValueError("trust " + num(trust) + " is outside [0,1]");
    }
    const double u = untrust.value_or(1.0 - trust);
    if (!in_unit(u)) {
        throw ValueError("untrust " + num(u) + " is outside [0,1]");
    }
    TrustPair p{trust, u};
    if (policy.strict && !is_complementary(p, policy.tolerance)) {
        throw ValueError("pair (" + num(trust) + ", " + num(u) + ") is not complementary");
    }
    return p;
}

bool is_complementary(TrustPair p, double tolerance) noexcept {
    return std::abs(p.trust + p.untrust - 1.0) <= tolerance;
}

TrustClass classify(double trust) {
    if (!in_unit(trust)) {
        throw ValueError("trust " + num(trust) + " is outside [0,1]");
    }
    if (trust >= 0.85) return TrustClass::VeryHigh;
    if (trust >= 0.70) return TrustClass::High;
    if (trust >= 0.50) return TrustClass::Indifferent;
    if (trust >= 0.30) return TrustClass::Low;
    return TrustClass::VeryLow;
}

std::string display_round(double x, int decimals) {
    if (decimals < 0) decimals = 0;
    if (!std::isfinite(x)) return num(x);

    std::array<char, 512> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::abs(x),
                                   std::chars_format::fixed);
    std::string digits = ec == std::errc{} ? std::string(buf.data(), end) : std::string("0");

    std::string whole = digits;
    std::string frac;
    if (auto dot = digits.find('.'); dot != std::string::npos) {
        whole = digits.substr(0, dot);
        frac = digits.substr(dot + 1);
    }
    frac.resize(static_cast<std::size_t>(decimals), '0');

    std::string out = whole;
    if (decimals > 0) {
        out += '.';
        out += frac;
    }
    const bool zero = out.find_first_not_of("0.") == std::string::npos;
    if (std::signbit(x) && !zero) out.insert(out.begin(), '-');
    return out;
}

} // namespace trustroute
