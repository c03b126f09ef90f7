#pragma once

#include <vector>

#include "torsion/poly.hpp"
#include "torsion/scalars.hpp"

namespace torsion {

/// The affine model y^d = f(x) with 1 < d < n, gcd(n, d) = 1, deg f = n and
/// f square-free. Only constructible through new_curve().
template <class F>
class Curve {
public:
    long d() const { return d_; }
    long n() const { return n_; }
    const Poly<F>& f() const { return f_; }
    /// (n-1)(d-1)/2
    long genus() const { return (n_ - 1) * (d_ - 1) / 2; }

    template <class G>
    Curve<G> promote() const
    {
        return Curve<G>(d_, n_, torsion::promote<G>(f_));
    }

private:
    template <class>
    friend class Curve;
    template <class G>
    friend Curve<G> new_curve(long d, long n, Poly<G> f);

    Curve(long d, long n, Poly<F> f) : d_(d), n_(n), f_(std::move(f)) {}

    long d_;
    long n_;
    Poly<F> f_;
};

template <class F>
struct AffinePoint {
    F x;
    F y;

    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Checks the curve conditions in a fixed order: OrderError (d < 2 or
/// n <= d), GcdError, DegreeError, RepeatedRootError.
void validate_curve_parameters(long d, long n);

template <class F>
Curve<F> new_curve(long d, long n, Poly<F> f)
{
    validate_curve_parameters(d, n);
    if (f.degree() != static_cast<std::size_t>(n)) {
        throw DegreeError("f must have degree n=" + std::to_string(n));
    }
    if (!is_squarefree(f)) {
        throw RepeatedRootError("f has a repeated root");
    }
    return Curve<F>(d, n, std::move(f));
}

template <class F>
bool on_curve(const Curve<F>& c, const AffinePoint<F>& p)
{
    return pow(p.y, c.d()) == c.f()(p.x);
}

/// Result of rescaling a curve with leading coefficient c0 to a monic model
/// y^d = h(x), where h(x) = c0^{-d i} f(c0^{-j} x) and d i + n j = 1. The
/// isomorphism from the monic model back to the source is
/// (x, y) -> (x_scale * x, y_scale * y) with x_scale = c0^{-j},
/// y_scale = c0^{i}.
struct MonicNormalization {
    Curve<Rational> target;
    long i;
    long j;
    Rational c0;
    Rational x_scale;
    Rational y_scale;

    AffinePoint<Rational> to_source(const AffinePoint<Rational>& p) const
    {
        return {x_scale * p.x, y_scale * p.y};
    }
};

/// Uses the Bezout pair with the smallest |i|.
MonicNormalization normalize_monic(long d, long n, const QPoly& f);
/// Uses the given pair; requires d i + n j = 1.
MonicNormalization normalize_monic(long d, long n, const QPoly& f, long i, long j);

struct OrderDPoints {
    std::vector<AffinePoint<Rational>> points;
    /// n minus the number of rational roots found.
    std::size_t residual_degree;
};

/// The points (w, 0) for the rational roots w of f, in increasing order.
OrderDPoints order_d_points(const Curve<Rational>& c);

/// Rational roots of a nonzero rational polynomial (rational root test).
std::vector<Rational> rational_roots(const QPoly& f);

} // namespace torsion
