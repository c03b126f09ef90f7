#include "torsion/series.hpp"

#include <numeric>
#include <string>

#include "torsion/errors.hpp"

namespace torsion {

TruncationSpec TruncationSpec::make(long m, long d, long E)
{
    if (d < 2 || m < 1) {
        throw PreconditionError("truncation needs d >= 2 and m >= 1");
    }
    if (std::gcd(m, d) != 1) {
        throw PreconditionError("truncation needs gcd(m, d) = 1");
    }
    if (E < 2) {
        throw PreconditionError("truncation needs E >= 2");
    }
    return {m, d, E};
}

QPoly truncated_binomial(const Rational& r, long E)
{
    if (E < 1) {
        throw PreconditionError("truncation length must be at least 1");
    }
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(E));
    Rational term(1);
    for (long k = 0; k < E; ++k) {
        c.push_back(term);
        term *= (r - Rational(k)) / Rational(k + 1);
    }
    return QPoly(std::move(c));
}

QPoly truncated_binomial(const TruncationSpec& spec)
{
    return truncated_binomial(spec.r(), spec.E());
}

QPoly truncation_defect(const TruncationSpec& spec)
{
    const QPoly one_plus_x({Rational(1), Rational(1)});
    return pow(one_plus_x, static_cast<unsigned long>(spec.m()))
         - pow(truncated_binomial(spec), static_cast<unsigned long>(spec.d()));
}

namespace {

void require_degree_gap(const TruncationSpec& spec)
{
    if (spec.m() <= spec.d() * (spec.E() - 1)) {
        throw HypothesisError("truncation needs m > d(E-1): m=" + std::to_string(spec.m())
                              + ", d(E-1)=" + std::to_string(spec.d() * (spec.E() - 1)));
    }
}

} // namespace

std::size_t check_truncation_valuation(const TruncationSpec& spec)
{
    require_degree_gap(spec);
    return valuation_at_zero(truncation_defect(spec));
}

QPoly truncation_quotient(const TruncationSpec& spec)
{
    require_degree_gap(spec);
    return exact_div(truncation_defect(spec),
                     QPoly::monomial(Rational(1), static_cast<std::size_t>(spec.E())));
}

MinusOneCheck nonvanishing_at_minus_one(const TruncationSpec& spec, long p)
{
    if (!is_prime(p) || spec.d() % p != 0) {
        throw PreconditionError(std::to_string(p) + " is not a prime divisor of d="
                                + std::to_string(spec.d()));
    }
    Rational at_minus_one = truncated_binomial(spec)(Rational(-1));
    PAdicValue v = padic_valuation(at_minus_one, p);
    return {!at_minus_one.is_zero(), v};
}

} // namespace torsion
