#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torsion/curves.hpp"
#include "torsion/poly.hpp"
#include "torsion/scalars.hpp"

namespace torsion {

/// Which polynomial identity the witness function satisfies. In every case
/// the witness is phi = u(x) y - lambda v(x) and its norm
/// (lambda v)^d - u^d f is a nonzero multiple of (x - a)^m.
enum class IdentityKind {
    ShiftPower,    ///< general u, v with norm A (x-a)^m
    InfinityShift, ///< u = x^e, a = -1: x^{ed} f + v^d = (1+x)^m, lambda^d = -1
    PureOrderN,    ///< u = 1, lambda = 1: f - v^d = (x-a)^n
    BranchPoint,   ///< u = 0, v = x - a: order-d point (a, 0)
};

/// Why the order is exactly m rather than a proper divisor of m.
enum class ExactnessRule {
    Prime,                ///< m is prime
    BelowTwiceN,          ///< m < 2n
    OddBelowThriceN,      ///< m odd and m < 3n
    TwiceNOrderNExcluded, ///< m = 2n and f - c0 (x-a)^n is not a d-th power
    BranchPoint,          ///< y(P) = 0, which forces order d
};

std::string_view to_string(IdentityKind kind);
std::string_view to_string(ExactnessRule rule);
std::optional<IdentityKind> parse_identity_kind(std::string_view text);
std::optional<ExactnessRule> parse_exactness_rule(std::string_view text);

/// A point whose ordinate lies outside Q(i); only its abscissa is stored and
/// the ordinate is the one cut out by the witness function.
struct SymbolicPoint {
    GaussianRational x;
    friend bool operator==(const SymbolicPoint&, const SymbolicPoint&) = default;
};

using CertificatePoint = std::variant<AffinePoint<GaussianRational>, SymbolicPoint>;

/// Unvalidated curve data as carried by a certificate.
struct CurveModel {
    long d = 0;
    long n = 0;
    GPoly f;
    friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

/// Self-contained claim that a point has exact order m on y^d = f(x).
/// Everything needed to re-check the claim is stored explicitly.
struct TorsionCertificate {
    CurveModel curve;
    CertificatePoint point;
    long m = 0;
    IdentityKind identity_kind = IdentityKind::ShiftPower;
    GPoly u;
    GPoly v;
    GaussianRational a;
    long e = 0;
    /// Empty means "a d-th root of -1 outside Q(i)".
    std::optional<GaussianRational> lambda;
    ExactnessRule exactness_rule = ExactnessRule::BelowTwiceN;
    /// BranchPoint only: f / (x - a), which ties the certificate to every
    /// coefficient of f. Zero for the other kinds.
    GPoly cofactor;

    friend bool operator==(const TorsionCertificate&, const TorsionCertificate&) = default;
};

/// w^d - u^d f: the norm of u(x) y - w(x) down to the x-line.
template <class F>
Poly<F> norm_poly(const Poly<F>& u, const Poly<F>& w, const Poly<F>& f, long d)
{
    if (d < 2) {
        throw PreconditionError("norm needs d >= 2");
    }
    const auto e = static_cast<unsigned long>(d);
    return pow(w, e) - pow(u, e) * f;
}

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    bool ok = true;
    std::vector<CheckResult> checks;

    void add(std::string name, bool passed, std::string detail = {});
    const CheckResult* find(std::string_view name) const;
};

/// Replays every check on the certificate. Never throws on mathematically
/// invalid input; every failure is listed in the report.
VerificationReport verify_certificate(const TorsionCertificate& cert);

/// True when f - lead(f) (x-a)^n is a constant times v^d with d deg v < n,
/// i.e. the curve carries an order-n point with abscissa a.
bool has_order_n_shape(const GPoly& f, long n, long d, const GaussianRational& a);

/// The clause that certifies exactness for a principal m(P) - m(O) with
/// y(P) != 0, if any of m prime / m < 2n / odd m < 3n applies.
std::optional<ExactnessRule> exactness_clause(long m, long n);

/// Rewrites a certificate on the monic model into one on the source curve of
/// the normalization. Symbolic points are refused with UnsupportedField.
TorsionCertificate transfer_certificate(const TorsionCertificate& on_monic,
                                        const MonicNormalization& normalization);

} // namespace torsion
