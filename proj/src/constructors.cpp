#include "torsion/constructors.hpp"

#include <string>

#include "torsion/errors.hpp"
#include "torsion/series.hpp"
#include "torsion/verdict.hpp"

namespace torsion {

namespace {

GaussianRational lift(const Rational& q)
{
    return GaussianRational(q);
}

std::string triple(long n, long d, long m)
{
    return "(n,d,m)=(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(m) + ")";
}

void require_pair(long n, long d)
{
    try {
        validate_curve_parameters(d, n);
    } catch (const Error& ex) {
        throw PreconditionError(ex.what());
    }
}

// d = 2, m = 2n. With u = x + C write x^n = Q u^2 + R and put
// s = Q + 1, r = u^2 - R, f = r s, v = x^n / 2 + r. Then
// v^2 - u^2 f = x^{2n} / 4 and f is monic of degree n.
Construction construct_twice_n(long n, long search_limit)
{
    const QPoly x_pow_n = QPoly::monomial(Rational(1), static_cast<std::size_t>(n));
    const QPoly one = QPoly::constant(Rational(1));
    long tried = 0;
    for (long magnitude = 1; tried < search_limit; ++magnitude) {
        for (long sign : {1L, -1L}) {
            if (tried >= search_limit) {
                break;
            }
            ++tried;
            const QPoly u = QPoly::linear_root(Rational(-sign * magnitude));
            const auto [Q, R] = divrem(x_pow_n, u * u);
            const QPoly r = u * u - R;
            QPoly f = r * (Q + one);
            if (f.degree() != static_cast<std::size_t>(n) || !is_squarefree(f)) {
                continue;
            }
            GPoly f_lifted = promote<GaussianRational>(f);
            if (has_order_n_shape(f_lifted, n, 2, GaussianRational())) {
                continue;
            }
            const QPoly v = x_pow_n * Rational(mpz_class(1), mpz_class(2)) + r;
            const Rational y = v(Rational(0)) * u(Rational(0)).inverse();
            Curve<Rational> curve = new_curve(2, n, std::move(f));
            TorsionCertificate cert;
            cert.curve = {2, n, std::move(f_lifted)};
            cert.point = AffinePoint<GaussianRational>{GaussianRational(), lift(y)};
            cert.m = 2 * n;
            cert.identity_kind = IdentityKind::ShiftPower;
            cert.u = promote<GaussianRational>(u);
            cert.v = promote<GaussianRational>(v);
            cert.a = GaussianRational();
            cert.e = 0;
            cert.lambda = GaussianRational(1);
            cert.exactness_rule = ExactnessRule::TwiceNOrderNExcluded;
            return {std::move(curve), cert.point, cert};
        }
    }
    throw SearchExhausted("no usable u = x + C among " + std::to_string(search_limit)
                          + " values of C for " + triple(n, 2, 2 * n));
}

} // namespace

Construction construct_order_d(const Curve<Rational>& curve, const Rational& w)
{
    if (!curve.f()(w).is_zero()) {
        throw PreconditionError("abscissa " + w.to_string() + " is not a root of f");
    }
    TorsionCertificate cert;
    cert.curve = {curve.d(), curve.n(), promote<GaussianRational>(curve.f())};
    cert.point = AffinePoint<GaussianRational>{lift(w), GaussianRational()};
    cert.m = curve.d();
    cert.identity_kind = IdentityKind::BranchPoint;
    cert.u = GPoly();
    cert.v = GPoly::linear_root(lift(w));
    cert.a = lift(w);
    cert.e = 0;
    cert.lambda = GaussianRational(1);
    cert.exactness_rule = ExactnessRule::BranchPoint;
    cert.cofactor = exact_div(cert.curve.f, cert.v);
    return {curve, cert.point, cert};
}

Construction construct_order_d(long n, long d)
{
    require_pair(n, d);
    QPoly f = QPoly::constant(Rational(1));
    for (long k = 0; k < n; ++k) {
        f *= QPoly::linear_root(Rational(k));
    }
    return construct_order_d(new_curve(d, n, std::move(f)), Rational(0));
}

Construction construct_order_n(long n, long d, const Rational& a, const QPoly& v)
{
    require_pair(n, d);
    if (v.is_zero() || d * static_cast<long>(v.deg()) > n - 1) {
        throw PreconditionError("order-n witness needs v != 0 and d deg v <= n - 1");
    }
    QPoly f = pow(QPoly::linear_root(a), static_cast<unsigned long>(n))
            + pow(v, static_cast<unsigned long>(d));
    Curve<Rational> curve = new_curve(d, n, std::move(f));
    const Rational c = v(a);
    if (c.is_zero()) {
        throw ZeroOrdinateError("v(a) = 0 gives a point with zero ordinate");
    }

    TorsionCertificate cert;
    cert.curve = {d, n, promote<GaussianRational>(curve.f())};
    cert.point = AffinePoint<GaussianRational>{lift(a), lift(c)};
    cert.m = n;
    cert.identity_kind = IdentityKind::PureOrderN;
    cert.u = GPoly::constant(GaussianRational(1));
    cert.v = promote<GaussianRational>(v);
    cert.a = lift(a);
    cert.e = 0;
    cert.lambda = GaussianRational(1);
    cert.exactness_rule = ExactnessRule::BelowTwiceN;
    return {std::move(curve), cert.point, cert};
}

Construction construct_div_d(long n, long d, long m, long search_limit)
{
    require_pair(n, d);
    if (m % d != 0) {
        throw PreconditionError("m must be divisible by d for " + triple(n, d, m));
    }
    if (m <= n || m > 2 * n) {
        throw PreconditionError("divisible-by-d construction needs n < m <= 2n for " + triple(n, d, m));
    }
    const long ell = m / d;
    const long q_degree = n - m + ell;
    if (q_degree < 0) {
        const bool is_m0 = m == d * ((n + d) / d);
        throw PreconditionError("n - m + m/d < 0 for " + triple(n, d, m),
                                std::string(is_m0 ? rules::kM0Obstruction : rules::kUndecided));
    }

    if (m == 2 * n) {
        return construct_twice_n(n, search_limit);
    }

    // B = 1, A = -1, D = 1/(d B^{d-1}) = 1/d.
    const Rational D(mpz_class(1), mpz_class(d));
    const QPoly x_pow_m = QPoly::monomial(Rational(1), static_cast<std::size_t>(m));
    const QPoly head = QPoly::monomial(Rational(1), static_cast<std::size_t>(ell))
                     + QPoly::monomial(D, static_cast<std::size_t>(q_degree));

    long tried = 0;
    for (long magnitude = 1; tried < search_limit; ++magnitude) {
        for (long sign : {1L, -1L}) {
            if (tried >= search_limit) {
                break;
            }
            const Rational C(sign * magnitude);
            if (C == -D) {
                continue;
            }
            ++tried;
            QPoly v = head + QPoly::constant(C);
            QPoly f = pow(v, static_cast<unsigned long>(d)) - x_pow_m;
            if (f.degree() != static_cast<std::size_t>(n) || !is_squarefree(f)) {
                continue;
            }
            GPoly f_lifted = promote<GaussianRational>(f);
            Curve<Rational> curve = new_curve(d, n, std::move(f));
            TorsionCertificate cert;
            cert.curve = {d, n, std::move(f_lifted)};
            cert.point = AffinePoint<GaussianRational>{GaussianRational(), lift(v(Rational(0)))};
            cert.m = m;
            cert.identity_kind = IdentityKind::ShiftPower;
            cert.u = GPoly::constant(GaussianRational(1));
            cert.v = promote<GaussianRational>(v);
            cert.a = GaussianRational();
            cert.e = 0;
            cert.lambda = GaussianRational(1);
            cert.exactness_rule = ExactnessRule::BelowTwiceN;
            return {std::move(curve), cert.point, cert};
        }
    }
    throw SearchExhausted("no square-free f_C among " + std::to_string(search_limit)
                          + " values of C for " + triple(n, d, m));
}

Construction construct_n_plus_ed(long n, long d, long e)
{
    require_pair(n, d);
    if (e < 1) {
        throw PreconditionError("e must be positive");
    }
    const long m = n + e * d;
    const long E = e * d;
    if (m <= d * (E - 1)) {
        throw HypothesisError("n + ed > d(ed - 1) fails for " + triple(n, d, m),
                              std::string(e == 1 ? rules::kNPlusDBound : rules::kNPlusEDBound));
    }
    const auto spec = TruncationSpec::make(m, d, E);
    const QPoly V = truncated_binomial(spec);
    const QPoly defect = truncation_defect(spec);
    const std::size_t valuation = valuation_at_zero(defect);
    if (valuation != static_cast<std::size_t>(E) && valuation != static_cast<std::size_t>(E) + 1) {
        throw InternalError("truncation defect has valuation " + std::to_string(valuation));
    }
    QPoly f = exact_div(defect, QPoly::monomial(Rational(1), static_cast<std::size_t>(E)));
    Curve<Rational> curve = new_curve(d, n, std::move(f));

    std::optional<GaussianRational> lambda;
    if (d % 2 == 1) {
        lambda = GaussianRational(-1);
    } else if (d % 4 == 2) {
        lambda = GaussianRational::i();
    }
    const auto rule = exactness_clause(m, n);
    if (!rule) {
        throw InternalError("no exactness clause applies to " + triple(n, d, m));
    }

    TorsionCertificate cert;
    cert.curve = {d, n, promote<GaussianRational>(curve.f())};
    const Rational sign_v = (e % 2 == 0 ? Rational(1) : Rational(-1)) * V(Rational(-1));
    if (lambda) {
        cert.point = AffinePoint<GaussianRational>{GaussianRational(-1), *lambda * lift(sign_v)};
    } else {
        cert.point = SymbolicPoint{GaussianRational(-1)};
    }
    cert.m = m;
    cert.identity_kind = IdentityKind::InfinityShift;
    cert.u = GPoly::monomial(GaussianRational(1), static_cast<std::size_t>(e));
    cert.v = promote<GaussianRational>(V);
    cert.a = GaussianRational(-1);
    cert.e = e;
    cert.lambda = lambda;
    cert.exactness_rule = *rule;
    return {std::move(curve), cert.point, cert};
}

Construction construct(const ConstructionRequest& request)
{
    const long n = request.n;
    const long d = request.d;
    require_pair(n, d);
    auto style = request.style;
    if (!style) {
        if (request.m < 2) {
            throw PreconditionError("m must be at least 2");
        }
        const Verdict verdict = reachability_verdict(n, d, request.m);
        if (verdict.status != VerdictStatus::ReachableConstructive) {
            throw PreconditionError(std::string(to_string(verdict.status)) + " for "
                                        + triple(n, d, request.m),
                                    verdict.deciding_rule);
        }
        const auto& rule = verdict.deciding_rule;
        if (rule == rules::kOrderD) {
            style = ConstructionStyle::OrderD;
        } else if (rule == rules::kOrderN) {
            style = ConstructionStyle::OrderN;
        } else if (rule == rules::kDivisibleByD) {
            style = ConstructionStyle::DivisibleByD;
        } else {
            style = ConstructionStyle::NPlusED;
        }
    }
    Construction built = [&]() -> Construction {
    switch (*style) {
    case ConstructionStyle::OrderD:
        return construct_order_d(n, d);
    case ConstructionStyle::OrderN:
        return construct_order_n(n, d, request.a, request.v.value_or(QPoly::constant(Rational(1))));
    case ConstructionStyle::DivisibleByD:
        return construct_div_d(n, d, request.m, request.search_limit);
    case ConstructionStyle::NPlusED: {
        long e = 0;
        if (request.e) {
            e = *request.e;
        } else if (request.m > n && (request.m - n) % d == 0) {
            e = (request.m - n) / d;
        } else {
            throw PreconditionError("m is not of the form n + e d for " + triple(n, d, request.m));
        }
        return construct_n_plus_ed(n, d, e);
    }
    }
    throw InternalError("unhandled construction style");
    }();
    if (request.m != 0 && built.certificate.m != request.m) {
        throw PreconditionError("requested style yields order " + std::to_string(built.certificate.m)
                                + ", not " + std::to_string(request.m));
    }
    return built;
}

AffinePoint<GaussianRational> materialize_point(const Construction& c)
{
    if (const auto* p = std::get_if<AffinePoint<GaussianRational>>(&c.point)) {
        return *p;
    }
    throw UnsupportedField("the ordinate needs a d-th root of -1 outside Q(i)");
}

} // namespace torsion
