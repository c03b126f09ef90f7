#include "torsion/certificate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <utility>

#include "torsion/errors.hpp"

namespace torsion {

namespace {

constexpr std::array<std::pair<IdentityKind, std::string_view>, 4> kIdentityNames{{
    {IdentityKind::ShiftPower, "ShiftPower"},
    {IdentityKind::InfinityShift, "InfinityShift"},
    {IdentityKind::PureOrderN, "PureOrderN"},
    {IdentityKind::BranchPoint, "BranchPoint"},
}};

constexpr std::array<std::pair<ExactnessRule, std::string_view>, 5> kRuleNames{{
    {ExactnessRule::Prime, "m-prime"},
    {ExactnessRule::BelowTwiceN, "m-below-2n"},
    {ExactnessRule::OddBelowThriceN, "m-odd-below-3n"},
    {ExactnessRule::TwiceNOrderNExcluded, "m-equals-2n-order-n-excluded"},
    {ExactnessRule::BranchPoint, "branch-point-order-d"},
}};

template <class Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum value)
{
    for (const auto& [v, name] : table) {
        if (v == value) {
            return name;
        }
    }
    return "unknown";
}

template <class Enum, std::size_t N>
std::optional<Enum> value_of(const std::array<std::pair<Enum, std::string_view>, N>& table,
                             std::string_view text)
{
    for (const auto& [v, name] : table) {
        if (name == text) {
            return v;
        }
    }
    return std::nullopt;
}

template <class T>
std::string str(const T& value)
{
    std::ostringstream os;
    os << value;
    return os.str();
}

long pole_order(const GPoly& u, const GPoly& w, long n, long d)
{
    long pole = -1;
    if (!u.is_zero()) {
        pole = d * static_cast<long>(u.deg()) + n;
    }
    if (!w.is_zero()) {
        pole = std::max(pole, d * static_cast<long>(w.deg()));
    }
    return pole;
}

} // namespace

std::string_view to_string(IdentityKind kind)
{
    return name_of(kIdentityNames, kind);
}

std::string_view to_string(ExactnessRule rule)
{
    return name_of(kRuleNames, rule);
}

std::optional<IdentityKind> parse_identity_kind(std::string_view text)
{
    return value_of(kIdentityNames, text);
}

std::optional<ExactnessRule> parse_exactness_rule(std::string_view text)
{
    return value_of(kRuleNames, text);
}

void VerificationReport::add(std::string name, bool passed, std::string detail)
{
    ok = ok && passed;
    checks.push_back({std::move(name), passed, std::move(detail)});
}

const CheckResult* VerificationReport::find(std::string_view name) const
{
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const CheckResult& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

bool has_order_n_shape(const GPoly& f, long n, long d, const GaussianRational& a)
{
    const GPoly rest = f - pow(GPoly::linear_root(a), static_cast<unsigned long>(n)) * f.leading();
    if (rest.is_zero()) {
        return true;
    }
    // deg rest < n always, so d deg v < n holds for any d-th root v.
    return monic_root(make_monic(rest), static_cast<unsigned>(d)).has_value();
}

std::optional<ExactnessRule> exactness_clause(long m, long n)
{
    if (m < 2 * n) {
        return ExactnessRule::BelowTwiceN;
    }
    if (m % 2 == 1 && m < 3 * n) {
        return ExactnessRule::OddBelowThriceN;
    }
    if (is_prime(m)) {
        return ExactnessRule::Prime;
    }
    return std::nullopt;
}

namespace {

void verify_into(const TorsionCertificate& cert, VerificationReport& report)
{
    const long d = cert.curve.d;
    const long n = cert.curve.n;
    const long m = cert.m;
    const GPoly& f = cert.curve.f;
    const GaussianRational one(1);

    // Curve invariants.
    const bool params_ok = d >= 2 && n > d && std::gcd(n, d) == 1 && m >= 2;
    report.add("parameters", params_ok,
               "d=" + std::to_string(d) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
    if (!params_ok) {
        return;
    }
    const bool degree_ok = f.degree() == static_cast<std::size_t>(n);
    report.add("degree", degree_ok, "deg f = " + (f.is_zero() ? std::string("-inf") : std::to_string(f.deg())));
    if (!degree_ok) {
        return;
    }
    report.add("squarefree", is_squarefree(f));

    // Witness shape per identity kind.
    const bool symbolic = std::holds_alternative<SymbolicPoint>(cert.point);
    const GaussianRational lambda_pow_d =
        cert.lambda ? pow(*cert.lambda, d) : GaussianRational(-1);
    {
        bool shape = true;
        std::string why;
        auto need = [&](bool cond, const char* what) {
            if (!cond && shape) {
                shape = false;
                why = what;
            }
        };
        if (symbolic) {
            need(cert.identity_kind == IdentityKind::InfinityShift,
                 "symbolic points only occur with InfinityShift");
        }
        need(!cert.lambda || !cert.lambda->is_zero(), "lambda must be nonzero");
        switch (cert.identity_kind) {
        case IdentityKind::ShiftPower:
            need(!cert.u.is_zero(), "u must be nonzero");
            need(cert.lambda.has_value(), "lambda must be explicit");
            break;
        case IdentityKind::InfinityShift:
            need(cert.e >= 1, "e must be positive");
            need(cert.e >= 1 && cert.u == GPoly::monomial(one, static_cast<std::size_t>(cert.e)),
                 "u must be x^e");
            need(cert.a == GaussianRational(-1), "a must be -1");
            need(lambda_pow_d == GaussianRational(-1), "lambda^d must be -1");
            break;
        case IdentityKind::PureOrderN:
            need(m == n, "m must equal n");
            need(cert.u == GPoly::constant(one), "u must be 1");
            need(cert.lambda == one, "lambda must be 1");
            need(!cert.v.is_zero() && d * static_cast<long>(cert.v.deg()) < n,
                 "need d deg v < n");
            break;
        case IdentityKind::BranchPoint:
            need(m == d, "m must equal d");
            need(cert.u.is_zero(), "u must be 0");
            need(cert.lambda == one, "lambda must be 1");
            need(cert.v == GPoly::linear_root(cert.a), "v must be x - a");
            break;
        }
        if (cert.identity_kind != IdentityKind::BranchPoint) {
            need(cert.cofactor.is_zero(), "cofactor is only used by BranchPoint");
        }
        report.add("shape", shape, shape ? std::string(to_string(cert.identity_kind)) : why);
    }

    // Norm identity: (lambda v)^d - u^d f = A (x-a)^m with A != 0.
    const GPoly lambda_v_pow_d = pow(cert.v, static_cast<unsigned long>(d)) * lambda_pow_d;
    const GPoly norm = lambda_v_pow_d - pow(cert.u, static_cast<unsigned long>(d)) * f;
    const GPoly target = pow(GPoly::linear_root(cert.a), static_cast<unsigned long>(m));
    // The two normalized kinds fix A = -1.
    const bool fixed_scale = cert.identity_kind == IdentityKind::PureOrderN
                          || cert.identity_kind == IdentityKind::InfinityShift;
    const bool identity_ok = !norm.is_zero() && norm == target * norm.leading()
                          && (!fixed_scale || norm.leading() == GaussianRational(-1));
    if (cert.identity_kind == IdentityKind::BranchPoint && identity_ok
        && f != GPoly::linear_root(cert.a) * cert.cofactor) {
        report.add("identity", false, "f != (x-a) * cofactor");
    } else {
        report.add("identity", identity_ok,
                   identity_ok ? "norm = (" + norm.leading().to_string() + ")*(x-a)^" + std::to_string(m)
                               : "norm is not a nonzero multiple of (x-a)^m");
    }

    const GPoly w = cert.lambda ? cert.v * *cert.lambda : cert.v;
    const long pole = pole_order(cert.u, w, n, d);
    report.add("pole-order", pole == m, "pole order at infinity " + std::to_string(pole));

    // The point.
    const GaussianRational u_at = cert.u(cert.a);
    const GaussianRational v_at = cert.v(cert.a);
    GaussianRational y_pow_d;
    bool y_zero = false;
    if (symbolic) {
        const auto& p = std::get<SymbolicPoint>(cert.point);
        report.add("abscissa", p.x == cert.a, "x(P) = " + p.x.to_string());
        if (u_at.is_zero()) {
            report.add("witness-zero", false, "u(a) = 0 leaves the ordinate undetermined");
            return;
        }
        report.add("witness-zero", true, "ordinate defined by u(a) y = lambda v(a)");
        y_pow_d = lambda_pow_d * pow(v_at / u_at, d);
        y_zero = v_at.is_zero();
    } else {
        const auto& p = std::get<AffinePoint<GaussianRational>>(cert.point);
        report.add("abscissa", p.x == cert.a, "x(P) = " + p.x.to_string());
        const GaussianRational lambda = cert.lambda.value_or(one);
        report.add("witness-zero", (u_at * p.y - lambda * v_at).is_zero(),
                   "u(a) y(P) - lambda v(a)");
        y_pow_d = pow(p.y, d);
        y_zero = p.y.is_zero();
    }
    const GaussianRational f_at = f(cert.a);
    report.add("on-curve", y_pow_d == f_at, "y^d = " + y_pow_d.to_string() + ", f(a) = " + f_at.to_string());

    // The witness has no other zero: the conjugates (a, gamma y) are excluded
    // when y != 0 and u(a) != 0, and there are none when y = 0.
    if (y_zero) {
        report.add("single-zero", f_at.is_zero(), "y(P) = 0");
    } else {
        report.add("single-zero", !u_at.is_zero(), "u(a) = " + u_at.to_string());
    }

    bool exact = false;
    switch (cert.exactness_rule) {
    case ExactnessRule::Prime:
        exact = !y_zero && is_prime(m);
        break;
    case ExactnessRule::BelowTwiceN:
        exact = !y_zero && m < 2 * n;
        break;
    case ExactnessRule::OddBelowThriceN:
        exact = !y_zero && m % 2 == 1 && m < 3 * n;
        break;
    case ExactnessRule::TwiceNOrderNExcluded:
        exact = !y_zero && m == 2 * n && !has_order_n_shape(f, n, d, cert.a);
        break;
    case ExactnessRule::BranchPoint:
        exact = y_zero && m == d;
        break;
    }
    report.add("exactness", exact, std::string(to_string(cert.exactness_rule)));
}

} // namespace

VerificationReport verify_certificate(const TorsionCertificate& cert)
{
    VerificationReport report;
    try {
        verify_into(cert, report);
    } catch (const std::exception& ex) {
        report.add("evaluation", false, ex.what());
    }
    return report;
}

TorsionCertificate transfer_certificate(const TorsionCertificate& on_monic,
                                        const MonicNormalization& normalization)
{
    if (std::holds_alternative<SymbolicPoint>(on_monic.point)) {
        throw UnsupportedField("cannot transfer a certificate with a symbolic point");
    }
    const GaussianRational alpha(normalization.x_scale);
    const GaussianRational beta(normalization.y_scale);
    const GaussianRational inv_alpha = alpha.inverse();

    const auto& p = std::get<AffinePoint<GaussianRational>>(on_monic.point);
    TorsionCertificate out = on_monic;
    const Curve<Rational> source_curve = [&] {
        // f(x) = beta^d h(x / alpha)
        const QPoly& h = normalization.target.f();
        return new_curve(normalization.target.d(), normalization.target.n(),
                         scale_argument(h, normalization.x_scale.inverse())
                             * pow(normalization.y_scale, normalization.target.d()));
    }();
    out.curve = {source_curve.d(), source_curve.n(), promote<GaussianRational>(source_curve.f())};
    out.point = AffinePoint<GaussianRational>{alpha * p.x, beta * p.y};
    out.u = scale_argument(on_monic.u, inv_alpha) * beta.inverse();
    out.v = scale_argument(on_monic.v, inv_alpha);
    out.a = alpha * on_monic.a;
    out.e = 0;
    if (on_monic.identity_kind == IdentityKind::BranchPoint) {
        out.v = GPoly::linear_root(out.a);
        out.cofactor = exact_div(out.curve.f, out.v);
    } else {
        out.identity_kind = IdentityKind::ShiftPower;
        out.lambda = on_monic.lambda.value_or(GaussianRational(1));
    }
    return out;
}

} // namespace torsion
