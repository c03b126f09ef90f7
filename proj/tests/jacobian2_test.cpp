#include "doctest.h"

#include <random>

#include "torsion/constructors.hpp"
#include "torsion/errors.hpp"
#include "random_curves.hpp"
#include "torsion/jacobian2.hpp"

using torsion::GaussianRational;
using torsion::QPoly;
using torsion::Rational;
using Divisor = torsion::MumfordDivisor<Rational>;

namespace {

Rational q(long p, long r = 1)
{
    return Rational(mpz_class(p), mpz_class(r));
}

QPoly xp(unsigned k)
{
    return QPoly::monomial(Rational(1), k);
}

const QPoly ONE = QPoly::constant(Rational(1));

auto div_d_curve()
{
    return torsion::new_curve(2, 5, xp(5) + xp(4) * q(1, 4) + xp(3) * q(2) + xp(2) + ONE);
}

} // namespace

TEST_CASE("embedding points")
{
    const auto c = div_d_curve();
    const auto D = torsion::embed_point(c, {q(0), q(1)});
    CHECK(D.u == QPoly::x());
    CHECK(D.v == ONE);
    CHECK_THROWS_AS(torsion::embed_point(c, {q(0), q(2)}), torsion::PreconditionError);

    const auto cubic = torsion::new_curve(3, 4, xp(4) + ONE);
    CHECK_THROWS_AS(torsion::embed_point(cubic, {q(0), q(1)}), torsion::UnsupportedDegree);

    const auto g = torsion::new_curve(2, 5, xp(5) + QPoly::x() * q(-1));
    const auto W = torsion::embed_point(g, {q(1), q(0)});
    CHECK(W.u == QPoly::linear_root(q(1)));
    CHECK(W.v.is_zero());
}

TEST_CASE("group law basics")
{
    const auto c = div_d_curve();
    const auto D = torsion::embed_point(c, {q(0), q(1)});
    CHECK(torsion::add(c, D, Divisor::identity()) == D);
    CHECK(torsion::add(c, D, torsion::negate(c, D)).is_identity());
    CHECK(torsion::multiply(c, D, 6).is_identity());
    for (unsigned long k = 1; k < 6; ++k) {
        CHECK(!torsion::multiply(c, D, k).is_identity());
    }
    CHECK(torsion::order_of(c, D, 20) == 6u);
    CHECK(!torsion::order_of(c, D, 5).has_value());
    CHECK(torsion::order_of(c, Divisor::identity(), 3) == 1u);
    CHECK_THROWS_AS(torsion::order_of(c, D, 0), torsion::PreconditionError);
}

TEST_CASE("weierstrass points have order two")
{
    const QPoly f = QPoly::x() * (QPoly::x() - ONE) * (QPoly::x() + ONE) * (QPoly::x() - ONE * q(2))
                  * (QPoly::x() + ONE * q(2));
    const auto c = torsion::new_curve(2, 5, f);
    for (long w = -2; w <= 2; ++w) {
        const auto W = torsion::embed_point(c, {q(w), q(0)});
        CHECK(torsion::add(c, W, W).is_identity());
        CHECK(torsion::order_of(c, W, 10) == 2u);
    }
}

TEST_CASE("order over the gaussian rationals")
{
    const auto built = torsion::construct_n_plus_ed(5, 2, 1);
    const auto c = built.curve.promote<GaussianRational>();
    const auto D = torsion::embed_point(c, torsion::materialize_point(built));
    CHECK(D.u == torsion::GPoly::linear_root(GaussianRational(-1)));
    CHECK(torsion::order_of(c, D, 20) == 7u);
}

TEST_CASE("invalid divisors are rejected")
{
    const auto c = div_d_curve();
    const Divisor bad{QPoly::x(), QPoly::constant(q(2))};
    CHECK(!torsion::is_valid(c, bad));
    CHECK_THROWS_AS(torsion::add(c, bad, Divisor::identity()), torsion::PreconditionError);
}

TEST_CASE("random group law properties")
{
    std::mt19937 rng(314159);
    for (long genus : {2L, 3L}) {
        for (int round = 0; round < 5; ++round) {
            const auto s = random_curves::make(rng, genus);
            for (int trial = 0; trial < 10; ++trial) {
                const auto A = random_curves::random_divisor(rng, s);
                const auto B = random_curves::random_divisor(rng, s);
                const auto C = random_curves::random_divisor(rng, s);
                const auto AB = torsion::add(s.curve, A, B);
                CHECK(torsion::is_valid(s.curve, AB));
                CHECK(AB == torsion::add(s.curve, B, A));
                CHECK(torsion::add(s.curve, AB, C) == torsion::add(s.curve, A, torsion::add(s.curve, B, C)));
                CHECK(torsion::add(s.curve, A, torsion::negate(s.curve, A)).is_identity());
                CHECK(torsion::multiply(s.curve, A, 3) == torsion::add(s.curve, A, torsion::add(s.curve, A, A)));
            }
        }
    }
}
