#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "torsion/curves.hpp"
#include "torsion/errors.hpp"

using torsion::QPoly;
using torsion::Rational;

namespace {

Rational q(long p, long r = 1)
{
    return Rational(mpz_class(p), mpz_class(r));
}

const QPoly X = QPoly::x();

QPoly xp(unsigned k)
{
    return QPoly::monomial(Rational(1), k);
}

} // namespace

TEST_CASE("curve validation")
{
    const QPoly quintic{q(35, 4), q(35), q(35), q(21), q(7), q(1)};
    CHECK_NOTHROW(torsion::new_curve(2, 5, quintic));
    CHECK_THROWS_AS(torsion::new_curve(2, 4, xp(4) + QPoly::constant(q(1))), torsion::GcdError);
    CHECK_THROWS_AS(torsion::new_curve(2, 5, xp(5) + xp(2)), torsion::RepeatedRootError);
    CHECK_THROWS_AS(torsion::new_curve(2, 5, xp(4) + QPoly::constant(q(1))), torsion::DegreeError);
    CHECK_THROWS_AS(torsion::new_curve(3, 3, xp(3) + QPoly::constant(q(1))), torsion::OrderError);
    CHECK_THROWS_AS(torsion::new_curve(1, 3, xp(3) + QPoly::constant(q(1))), torsion::OrderError);
    CHECK_THROWS_AS(torsion::validate_curve_parameters(2, 6), torsion::GcdError);
}

TEST_CASE("genus")
{
    CHECK(torsion::new_curve(2, 5, xp(5) + QPoly::constant(q(1))).genus() == 2);
    CHECK(torsion::new_curve(2, 3, xp(3) + QPoly::constant(q(1))).genus() == 1);
    CHECK(torsion::new_curve(3, 5, xp(5) + QPoly::constant(q(1))).genus() == 4);
}

TEST_CASE("monic normalization with an explicit Bezout pair")
{
    const QPoly f = xp(3) * q(4) + QPoly::constant(q(1));
    const auto first = torsion::normalize_monic(2, 3, f, 2, -1);
    CHECK(first.target.f() == xp(3) + QPoly::constant(q(1, 256)));
    CHECK(first.x_scale == q(4));
    CHECK(first.y_scale == q(16));

    const auto second = torsion::normalize_monic(2, 3, f, -1, 1);
    CHECK(second.target.f() == xp(3) + QPoly::constant(q(16)));
    CHECK(second.x_scale == q(1, 4));
    CHECK(second.y_scale == q(1, 4));

    // The default pair has minimal |i|.
    const auto chosen = torsion::normalize_monic(2, 3, f);
    CHECK(chosen.i == -1);
    CHECK(chosen.j == 1);

    // Points move from the monic model onto the source curve.
    const auto source = torsion::new_curve(2, 3, f);
    const torsion::AffinePoint<Rational> on_h{q(0), q(4)};
    CHECK(torsion::on_curve(second.target, on_h));
    CHECK(torsion::on_curve(source, second.to_source(on_h)));

    CHECK_THROWS(torsion::normalize_monic(2, 3, f, 1, 1));
}

TEST_CASE("monic curves normalize to themselves")
{
    const QPoly f = xp(5) + X * q(3) + QPoly::constant(q(-2));
    const auto result = torsion::normalize_monic(2, 5, f);
    CHECK(result.target.f() == f);
    CHECK(result.x_scale == q(1));
    CHECK(result.y_scale == q(1));
}

TEST_CASE("normalization holds the curve identity for many leading coefficients")
{
    for (long d : {2L, 3L, 5L}) {
        for (long n = d + 1; n <= d + 6; ++n) {
            if (std::gcd(n, d) != 1) {
                continue;
            }
            for (long c0 : {-3L, 2L, 5L}) {
                const QPoly f = xp(static_cast<unsigned>(n)) * q(c0, 3) + X + QPoly::constant(q(1));
                const auto result = torsion::normalize_monic(d, n, f);
                CHECK(torsion::is_monic(result.target.f()));
                CHECK(d * result.i + n * result.j == 1);
                CHECK(torsion::pow(result.y_scale, d) * result.target.f()
                      == torsion::scale_argument(f, result.x_scale));
            }
        }
    }
}

TEST_CASE("rational roots and order-d points")
{
    const QPoly f = X * (X - QPoly::constant(q(1))) * (X + QPoly::constant(q(1)))
                  * (X - QPoly::constant(q(2))) * (X + QPoly::constant(q(2)));
    const auto points = torsion::order_d_points(torsion::new_curve(2, 5, f));
    CHECK(points.points.size() == 5);
    CHECK(points.residual_degree == 0);
    std::vector<Rational> xs;
    for (const auto& p : points.points) {
        CHECK(p.y.is_zero());
        xs.push_back(p.x);
    }
    std::sort(xs.begin(), xs.end());
    CHECK(xs == std::vector<Rational>{q(-2), q(-1), q(0), q(1), q(2)});

    const auto none = torsion::order_d_points(torsion::new_curve(2, 5, xp(5) + X * q(3) + QPoly::constant(q(3))));
    CHECK(none.points.empty());
    CHECK(none.residual_degree == 5);

    const auto one = torsion::order_d_points(torsion::new_curve(3, 5, xp(5) + X * q(16)));
    CHECK(one.points.size() == 1);
    CHECK(one.residual_degree == 4);

    CHECK(torsion::rational_roots(QPoly{q(-1, 2), q(0), q(2)})
          == std::vector<Rational>{q(-1, 2), q(1, 2)});
}
