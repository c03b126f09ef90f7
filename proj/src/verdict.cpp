#include "torsion/verdict.hpp"

#include <numeric>

#include "torsion/errors.hpp"

namespace torsion {

std::string_view to_string(VerdictStatus status)
{
    switch (status) {
    case VerdictStatus::ReachableConstructive:
        return "ReachableConstructive";
    case VerdictStatus::ReachableExistence:
        return "ReachableExistence";
    case VerdictStatus::Unreachable:
        return "Unreachable";
    case VerdictStatus::Open:
        return "Open";
    }
    return "unknown";
}

namespace {

std::optional<long> congruence_witness(long n, long d, long M)
{
    const long k = M / n;
    for (long j = 0; j <= k; ++j) {
        if ((M - j * n) % d == 0) {
            return j;
        }
    }
    return std::nullopt;
}

} // namespace

bool pole_order_congruence(long n, long d, long M)
{
    if (M <= 1 || M >= n * d) {
        throw PreconditionError("pole-order congruence needs 1 < M < nd");
    }
    return congruence_witness(n, d, M).has_value();
}

Verdict reachability_verdict(long n, long d, long m)
{
    if (d < 2 || n <= d || std::gcd(n, d) != 1 || m < 2) {
        throw PreconditionError("verdict needs gcd(n,d)=1, n > d >= 2, m >= 2");
    }
    Verdict v;
    v.n = n;
    v.d = d;
    v.m = m;
    v.characteristic_note = "char(K) = 0";
    v.detail.k = m / n;
    v.detail.m0 = d * ((n + d) / d);
    v.detail.ell0 = v.detail.m0 / d;
    v.detail.m1 = n + d;
    if (m % d == 0) {
        v.detail.ell = m / d;
    }
    if (m > n && (m - n) % d == 0) {
        v.detail.e = (m - n) / d;
    }
    if (m < n * d) {
        v.detail.j = congruence_witness(n, d, m);
    }

    auto decide = [&](VerdictStatus status, std::string_view rule) {
        v.status = status;
        v.deciding_rule = std::string(rule);
        return v;
    };

    if (m == d) {
        v.characteristic_note = "any characteristic not dividing d";
        return decide(VerdictStatus::ReachableConstructive, rules::kOrderD);
    }
    if (m < n) {
        v.characteristic_note = "any characteristic not dividing d";
        return decide(VerdictStatus::Unreachable, rules::kBelowN);
    }
    if (m == n) {
        v.characteristic_note = "any characteristic not dividing d";
        return decide(VerdictStatus::ReachableConstructive, rules::kOrderN);
    }
    if (m < n * d && !v.detail.j) {
        v.characteristic_note = "any characteristic not dividing d";
        return decide(VerdictStatus::Unreachable, rules::kCongruence);
    }
    if (v.detail.ell) {
        const long ell = *v.detail.ell;
        const long q_degree = n - m + ell;
        if (q_degree >= 0) {
            v.characteristic_note = q_degree == 0
                ? "char(K) = 0, or char(K) does not divide l = m/d"
                : "char(K) = 0, or char(K) does not divide n - m + l";
            return decide(VerdictStatus::ReachableConstructive, rules::kDivisibleByD);
        }
        if (m == v.detail.m0) {
            v.characteristic_note = "any characteristic not dividing d";
            return decide(VerdictStatus::Unreachable, rules::kM0Obstruction);
        }
        return decide(VerdictStatus::Open, rules::kUndecided);
    }
    if (v.detail.e) {
        const long e = *v.detail.e;
        if (e * d * d - (e + 1) * d < n) {
            return decide(VerdictStatus::ReachableConstructive, e == 1 ? rules::kNPlusD : rules::kNPlusED);
        }
        if (e == 1) {
            return decide(VerdictStatus::Unreachable, rules::kNPlusDBound);
        }
    }
    return decide(VerdictStatus::Open, rules::kUndecided);
}

} // namespace torsion
