#include "doctest.h"

#include <numeric>

#include "torsion/constructors.hpp"
#include "torsion/errors.hpp"
#include "torsion/json_io.hpp"
#include "torsion/verdict.hpp"

using torsion::VerdictStatus;
namespace rules = torsion::rules;

TEST_CASE("verdict examples")
{
    auto v = torsion::reachability_verdict(5, 3, 7);
    CHECK(v.status == VerdictStatus::Unreachable);
    CHECK(v.deciding_rule == rules::kCongruence);

    v = torsion::reachability_verdict(7, 5, 10);
    CHECK(v.status == VerdictStatus::Unreachable);
    CHECK(v.deciding_rule == rules::kM0Obstruction);
    CHECK(v.detail.m0 == 10);
    CHECK(v.detail.ell0 == 2);

    v = torsion::reachability_verdict(7, 4, 11);
    CHECK(v.status == VerdictStatus::Unreachable);
    CHECK(v.deciding_rule == rules::kNPlusDBound);

    v = torsion::reachability_verdict(5, 2, 3);
    CHECK(v.status == VerdictStatus::Unreachable);
    CHECK(v.deciding_rule == rules::kBelowN);

    v = torsion::reachability_verdict(5, 2, 8);
    CHECK(v.status == VerdictStatus::ReachableConstructive);
    CHECK(v.deciding_rule == rules::kDivisibleByD);
    CHECK(v.detail.ell == 4);

    CHECK(torsion::reachability_verdict(5, 2, 2).deciding_rule == rules::kOrderD);
    CHECK(torsion::reachability_verdict(5, 2, 5).deciding_rule == rules::kOrderN);
    CHECK(torsion::reachability_verdict(5, 2, 7).deciding_rule == rules::kNPlusD);
    CHECK(torsion::reachability_verdict(5, 2, 9).deciding_rule == rules::kNPlusED);
    CHECK(torsion::reachability_verdict(5, 2, 12).status == VerdictStatus::Open);

    CHECK_THROWS_AS(torsion::reachability_verdict(4, 2, 6), torsion::PreconditionError);
}

TEST_CASE("pole-order congruence")
{
    CHECK(torsion::pole_order_congruence(5, 3, 6));
    CHECK(!torsion::pole_order_congruence(5, 3, 7));
    for (long n = 3; n < 12; ++n) {
        for (long d = 2; d < n; ++d) {
            if (std::gcd(n, d) == 1) {
                CHECK(torsion::pole_order_congruence(n, d, d));
            }
        }
    }
    CHECK_THROWS_AS(torsion::pole_order_congruence(5, 3, 15), torsion::PreconditionError);
    CHECK_THROWS_AS(torsion::pole_order_congruence(5, 3, 1), torsion::PreconditionError);
}

TEST_CASE("pole-order congruence matches residue enumeration")
{
    for (long n = 3; n < 14; ++n) {
        for (long d = 2; d < n; ++d) {
            if (std::gcd(n, d) != 1) {
                continue;
            }
            for (long M = 2; M < n * d; ++M) {
                bool expected = false;
                for (long j = 0; j <= M / n; ++j) {
                    expected = expected || (M - j * n) % d == 0;
                }
                CHECK(torsion::pole_order_congruence(n, d, M) == expected);
            }
        }
    }
}

TEST_CASE("no verdict contradictions on a grid")
{
    for (long n = 3; n <= 11; ++n) {
        for (long d = 2; d <= 5 && d < n; ++d) {
            if (std::gcd(n, d) != 1) {
                continue;
            }
            for (long m = 2; m <= 2 * n + 4; ++m) {
                const auto verdict = torsion::reachability_verdict(n, d, m);
                torsion::ConstructionRequest request;
                request.n = n;
                request.d = d;
                request.m = m;
                if (verdict.status == VerdictStatus::ReachableConstructive) {
                    const auto built = torsion::construct(request);
                    CHECK(built.certificate.m == m);
                    CHECK(torsion::verify_certificate(built.certificate).ok);
                } else if (verdict.status == VerdictStatus::Unreachable) {
                    CHECK_THROWS_AS(torsion::construct(request), torsion::PreconditionError);
                }
            }
        }
    }
}

TEST_CASE("verdict JSON")
{
    const auto j = torsion::to_json(torsion::reachability_verdict(7, 5, 10));
    CHECK(j["status"] == "Unreachable");
    CHECK(j["deciding_rule"] == "m0-degree-obstruction");
    CHECK(j["n"] == 7);
}
