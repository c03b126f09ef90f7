#include "doctest.h"

#include <random>

#include "torsion/errors.hpp"
#include "torsion/scalars.hpp"

using torsion::GaussianRational;
using torsion::Rational;

namespace {

Rational q(long p, long r = 1)
{
    return Rational(mpz_class(p), mpz_class(r));
}

} // namespace

TEST_CASE("rationals are kept reduced")
{
    CHECK(q(6, 4) == q(3, 2));
    CHECK(q(6, 4).numerator() == 3);
    CHECK(q(6, 4).denominator() == 2);
    CHECK(q(-3, -6) == q(1, 2));
    CHECK(q(3, -6).sign() == -1);
    CHECK(q(4, 2).is_integer());
    CHECK_THROWS_AS(q(1, 0), torsion::InvalidInput);
}

TEST_CASE("rational parsing and printing")
{
    CHECK(Rational::parse("35/4") == q(35, 4));
    CHECK(Rational::parse("-7") == q(-7));
    CHECK(Rational::parse("10/4") == q(5, 2));
    CHECK(q(35, 4).to_string() == "35/4");
    CHECK(q(-8, 2).to_string() == "-4");
    CHECK_THROWS_AS(Rational::parse("1/0"), torsion::InvalidInput);
    CHECK_THROWS_AS(Rational::parse("abc"), torsion::InvalidInput);
    CHECK_THROWS_AS(Rational::parse(""), torsion::InvalidInput);
}

TEST_CASE("rational field operations")
{
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(9, 4) == q(3, 2));
    CHECK(q(2, 3) / q(4, 9) == q(3, 2));
    CHECK(q(-2, 7).inverse() == q(-7, 2));
    CHECK_THROWS(q(0).inverse());
    CHECK(q(1, 3) < q(1, 2));
    CHECK(torsion::pow(q(2, 3), 3) == q(8, 27));
    CHECK(torsion::pow(q(2, 3), -2) == q(9, 4));
    CHECK(torsion::pow(q(5), 0) == q(1));
}

TEST_CASE("gaussian rationals")
{
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    const GaussianRational z(q(1, 2), q(-3));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK(z.conj() == GaussianRational(q(1, 2), q(3)));
    CHECK(z.norm() == q(37, 4));
    CHECK(!z.is_rational());
    CHECK(GaussianRational(q(5)).is_rational());
    CHECK(torsion::pow(i, 4) == GaussianRational(1));
    CHECK(torsion::pow(i, -1) == -i);
    // c^2 = f(-1) for the order-7 point on the worked curve.
    const GaussianRational c = GaussianRational(q(5, 2)) * i;
    CHECK(c * c == GaussianRational(q(-25, 4)));
}

TEST_CASE("generalized binomial coefficients")
{
    CHECK(torsion::gen_binom(q(7, 2), 0) == q(1));
    CHECK(torsion::gen_binom(q(7, 2), 2) == q(35, 8));
    CHECK(torsion::gen_binom(q(5, 2), 1) == q(5, 2));
    CHECK(torsion::gen_binom(q(5), 7) == q(0));
    CHECK(torsion::gen_binom(q(7), 3) == q(35));
}

TEST_CASE("generalized binomials satisfy Pascal and never vanish at non-integers")
{
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational r = q(num(rng), den(rng));
        for (unsigned k = 1; k < 9; ++k) {
            CHECK(torsion::gen_binom(r, k)
                  == torsion::gen_binom(r - 1, k) + torsion::gen_binom(r - 1, k - 1));
            if (!r.is_integer()) {
                CHECK(!torsion::gen_binom(r, k).is_zero());
            }
        }
    }
}

TEST_CASE("p-adic valuation")
{
    CHECK(torsion::padic_valuation(q(0), 3).is_infinite());
    CHECK(torsion::padic_valuation(q(35, 8), 2).value() == -3);
    CHECK(torsion::padic_valuation(q(12), 2).value() == 2);
    CHECK(torsion::padic_valuation(q(-5, 2), 5).value() == 1);
    CHECK_THROWS_AS(torsion::padic_valuation(q(12), 4), torsion::InvalidInput);
    CHECK_THROWS_AS(torsion::padic_valuation(q(12), 1), torsion::InvalidInput);
    CHECK(torsion::is_prime(2));
    CHECK(torsion::is_prime(97));
    CHECK(!torsion::is_prime(91));
    CHECK(!torsion::is_prime(1));
}

TEST_CASE("p-adic valuation is additive")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 500);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a = q(num(rng), den(rng));
        const Rational b = q(num(rng), den(rng));
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        for (long p : {2L, 3L, 5L, 7L}) {
            CHECK(torsion::padic_valuation(a * b, p).value()
                  == torsion::padic_valuation(a, p).value() + torsion::padic_valuation(b, p).value());
        }
    }
}
