#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace torsion {

enum class VerdictStatus {
    ReachableConstructive, ///< a construction in this library realizes m
    ReachableExistence,    ///< known reachable, no construction implemented
    Unreachable,           ///< excluded by an obstruction
    Open,                  ///< no rule decides the triple
};

std::string_view to_string(VerdictStatus status);

/// Rule tags, stable strings used in verdicts and CLI error JSON.
namespace rules {
inline constexpr std::string_view kOrderD = "order-d-branch-points";
inline constexpr std::string_view kBelowN = "gap-below-n";
inline constexpr std::string_view kOrderN = "order-n";
inline constexpr std::string_view kCongruence = "pole-order-congruence";
inline constexpr std::string_view kM0Obstruction = "m0-degree-obstruction";
inline constexpr std::string_view kDivisibleByD = "divisible-by-d-construction";
inline constexpr std::string_view kNPlusDBound = "n-plus-d-bound";
inline constexpr std::string_view kNPlusD = "n-plus-d-construction";
inline constexpr std::string_view kNPlusED = "n-plus-ed-construction";
inline constexpr std::string_view kNPlusEDBound = "n-plus-ed-bound";
inline constexpr std::string_view kUndecided = "undecided";
} // namespace rules

/// Integers the rules are phrased in. Optional entries are absent when the
/// rule they belong to does not apply to the triple.
struct VerdictDetail {
    long k = 0;              ///< floor(m/n)
    std::optional<long> j;   ///< witness j <= k with m = j n (mod d), when m < nd
    std::optional<long> ell; ///< m/d when d | m
    long m0 = 0;             ///< d * floor((n+d)/d)
    long ell0 = 0;           ///< m0/d
    long m1 = 0;             ///< n + d
    std::optional<long> e;   ///< (m-n)/d when m = n + e d, e >= 1
};

struct Verdict {
    long n = 0;
    long d = 0;
    long m = 0;
    VerdictStatus status = VerdictStatus::Open;
    std::string deciding_rule;
    VerdictDetail detail;
    /// Characteristic requirement of the deciding rule; computations here
    /// are over characteristic zero only.
    std::string characteristic_note;
};

/// Classifies m for the pair (n, d). Requires gcd(n, d) = 1, n > d >= 2 and
/// m >= 2 (PreconditionError otherwise).
Verdict reachability_verdict(long n, long d, long m);

/// Does some j in [0, floor(M/n)] satisfy M = j n (mod d)? Requires
/// 1 < M < n d.
bool pole_order_congruence(long n, long d, long M);

} // namespace torsion
