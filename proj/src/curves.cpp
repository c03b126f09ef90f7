#include "torsion/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "torsion/errors.hpp"

namespace torsion {

void validate_curve_parameters(long d, long n)
{
    if (d < 2) {
        throw OrderError("d must be at least 2");
    }
    if (n <= d) {
        throw OrderError("n must exceed d (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }
    if (std::gcd(n, d) != 1) {
        throw GcdError("gcd(n, d) = " + std::to_string(std::gcd(n, d)) + " != 1");
    }
}

namespace {

/// Solutions of d*i + n*j = 1.
std::pair<long, long> bezout(long d, long n)
{
    long old_r = d, r = n;
    long old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    // old_r == 1 because gcd(d, n) == 1
    long i = old_s;
    i %= n;
    if (i > n / 2) {
        i -= n;
    } else if (i < -(n / 2)) {
        i += n;
    }
    if (2 * std::abs(i) == n && i < 0) {
        i += n;
    }
    return {i, (1 - d * i) / n};
}

} // namespace

MonicNormalization normalize_monic(long d, long n, const QPoly& f)
{
    validate_curve_parameters(d, n);
    auto [i, j] = bezout(d, n);
    return normalize_monic(d, n, f, i, j);
}

MonicNormalization normalize_monic(long d, long n, const QPoly& f, long i, long j)
{
    validate_curve_parameters(d, n);
    if (d * i + n * j != 1) {
        throw PreconditionError("exponents must satisfy d*i + n*j = 1");
    }
    if (f.degree() != static_cast<std::size_t>(n)) {
        throw DegreeError("f must have degree n=" + std::to_string(n));
    }
    const Rational c0 = f.leading();
    const Rational x_scale = pow(c0, -j);
    const Rational y_scale = pow(c0, i);
    const Rational y_scale_d = pow(y_scale, d);
    QPoly h = scale_argument(f, x_scale) * y_scale_d.inverse();

    if (!is_monic(h) || h * y_scale_d != scale_argument(f, x_scale)) {
        throw InternalError("monic normalization identity failed");
    }
    return {new_curve(d, n, std::move(h)), i, j, c0, x_scale, y_scale};
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class value)
{
    value = abs(value);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class p = 2; p * p <= value; ++p) {
        unsigned e = 0;
        while (mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t()) != 0) {
            value /= p;
            ++e;
        }
        if (e != 0) {
            factors.emplace_back(p, e);
        }
    }
    if (value > 1) {
        factors.emplace_back(value, 1);
    }
    std::vector<mpz_class> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t count = divisors.size();
        mpz_class power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t t = 0; t < count; ++t) {
                divisors.push_back(divisors[t] * power);
            }
        }
    }
    return divisors;
}

} // namespace

std::vector<Rational> rational_roots(const QPoly& f)
{
    if (f.is_zero()) {
        throw PreconditionError("roots of the zero polynomial");
    }
    std::vector<Rational> roots;
    QPoly g = f;
    if (valuation_at_zero(g) > 0) {
        roots.emplace_back(0);
        while (g.coeff(0).is_zero()) {
            g = exact_div(g, QPoly::x());
        }
    }
    if (g.deg() == 0) {
        return roots;
    }
    mpz_class common = 1;
    for (const auto& c : g.coefficients()) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
    }
    const mpz_class constant = (g.coeff(0) * Rational(common)).numerator();
    const mpz_class leading = (g.leading() * Rational(common)).numerator();

    std::set<Rational> found;
    for (const auto& p : positive_divisors(constant)) {
        for (const auto& q : positive_divisors(leading)) {
            for (int sign : {1, -1}) {
                Rational candidate(sign * p, q);
                if (found.count(candidate) == 0 && g(candidate).is_zero()) {
                    found.insert(candidate);
                }
            }
        }
    }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

OrderDPoints order_d_points(const Curve<Rational>& c)
{
    OrderDPoints result;
    for (auto& w : rational_roots(c.f())) {
        result.points.push_back({std::move(w), Rational(0)});
    }
    result.residual_degree = static_cast<std::size_t>(c.n()) - result.points.size();
    return result;
}

} // namespace torsion
