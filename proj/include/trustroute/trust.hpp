#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace trustroute {

inline constexpr double kComplementTolerance = 1e-9;

// A fuzzy trust factor [T U]. Plain value; use make_pair() to get a validated one.
struct TrustPair {
    double trust = 1.0;
    double untrust = 0.0;

    friend bool operator==(const TrustPair&, const TrustPair&) = default;
};

// Extremes of the scale: full trust and full untrust.
inline constexpr TrustPair kMaxTrust{1.0, 0.0};
inline constexpr TrustPair kMinTrust{0.0, 1.0};

// Linguistic trust scale, ordered from least to most trusted.
enum class TrustClass { VeryLow, Low, Indifferent, High, VeryHigh };

std::string_view to_string(TrustClass c) noexcept;
// Short label: VL, L, I, H, VH.
std::string_view short_label(TrustClass c) noexcept;

// Entries of the 2x2 propagation matrices. Defaults are the literals of the
// worked trust test (0.51 / 1.00 / 0.50) and untrust test (0.49 / 0.00 / 0.50).
struct ModelConstants {
    double theta_min = 0.51;
    double theta_max = 1.00;
    double theta_ind = 0.50;
    double upsilon_min = 0.49;
    double upsilon_max = 0.00;
    double upsilon_ind = 0.50;

    // Throws ValueError if any entry lies outside [0,1].
    void validate() const;

    friend bool operator==(const ModelConstants&, const ModelConstants&) = default;
};

struct PairPolicy {
    bool strict = true;
    double tolerance = kComplementTolerance;
};

/// Builds a validated pair. A missing untrust is taken as 1 - trust.
/// Throws ValueError for components outside [0,1], or, under a strict policy,
/// when |trust + untrust - 1| exceeds the tolerance.
TrustPair make_pair(double trust, std::optional<double> untrust = std::nullopt,
                    PairPolicy policy = {});

constexpr TrustPair complement(TrustPair p) noexcept { return {p.untrust, p.trust}; }

bool is_complementary(TrustPair p, double tolerance = kComplementTolerance) noexcept;

/// Maps a trust value onto the scale: the label of the greatest anchor at or
/// below the value (0.85 VH, 0.70 H, 0.50 I, 0.30 L, 0 VL).
/// Throws ValueError outside [0,1].
TrustClass classify(double trust);

/// Decimal rendering truncated toward zero at `decimals` places, zero padded.
/// Truncation works on the shortest round-trip form of `x`, so the result never
/// exceeds `x` and 0.825 renders as "0.82" at two places.
std::string display_round(double x, int decimals);

} // namespace trustroute
