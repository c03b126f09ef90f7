#pragma once

#include <cstddef>
#include <optional>

#include "torsion/curves.hpp"
#include "torsion/errors.hpp"
#include "torsion/poly.hpp"

// Divisor-class arithmetic on the Jacobian of y^2 = f(x), deg f = 2g + 1,
// in Mumford representation with Cantor's composition and reduction. Used as
// an order oracle independent of the certificate machinery.

namespace torsion {

template <class F>
struct MumfordDivisor {
    Poly<F> u; ///< monic
    Poly<F> v; ///< deg v < deg u, u | v^2 - f

    static MumfordDivisor identity() { return {Poly<F>::constant(F(1)), Poly<F>()}; }
    bool is_identity() const { return u.deg() == 0; }

    friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

namespace detail {

template <class F>
void require_hyperelliptic(const Curve<F>& c)
{
    if (c.d() != 2) {
        throw UnsupportedDegree("divisor arithmetic is implemented for d = 2 only");
    }
}

} // namespace detail

template <class F>
bool is_valid(const Curve<F>& c, const MumfordDivisor<F>& D)
{
    if (!is_monic(D.u) || static_cast<long>(D.u.deg()) > c.genus()) {
        return false;
    }
    if (!D.v.is_zero() && D.v.deg() >= D.u.deg()) {
        return false;
    }
    return ((D.v * D.v - c.f()) % D.u).is_zero();
}

/// Class of (P) - (O): (x - x(P), y(P)).
template <class F>
MumfordDivisor<F> embed_point(const Curve<F>& c, const AffinePoint<F>& p)
{
    detail::require_hyperelliptic(c);
    if (!on_curve(c, p)) {
        throw PreconditionError("point is not on the curve");
    }
    return {Poly<F>::linear_root(p.x), Poly<F>::constant(p.y)};
}

/// -(u, v) = (u, -v mod u).
template <class F>
MumfordDivisor<F> negate(const Curve<F>& c, const MumfordDivisor<F>& D)
{
    detail::require_hyperelliptic(c);
    return {D.u, (-D.v) % D.u};
}

template <class F>
MumfordDivisor<F> add(const Curve<F>& c, const MumfordDivisor<F>& D1, const MumfordDivisor<F>& D2)
{
    detail::require_hyperelliptic(c);
    if (!is_valid(c, D1) || !is_valid(c, D2)) {
        throw PreconditionError("divisor violates the Mumford invariants");
    }
    const Poly<F>& f = c.f();

    // Composition.
    const auto g1 = xgcd(D1.u, D2.u);
    const auto g2 = xgcd(g1.gcd, D1.v + D2.v);
    const Poly<F>& h = g2.gcd;
    const Poly<F> s1 = g2.s * g1.s;
    const Poly<F> s2 = g2.s * g1.t;
    const Poly<F>& s3 = g2.t;

    Poly<F> u = exact_div(D1.u * D2.u, h * h);
    Poly<F> v = exact_div(s1 * D1.u * D2.v + s2 * D2.u * D1.v + s3 * (D1.v * D2.v + f), h) % u;

    // Reduction.
    while (static_cast<long>(u.deg()) > c.genus()) {
        Poly<F> u_next = make_monic(exact_div(f - v * v, u));
        v = (-v) % u_next;
        u = std::move(u_next);
    }
    u = make_monic(u);
    v = v % u;
    return {std::move(u), std::move(v)};
}

/// k D by double-and-add.
template <class F>
MumfordDivisor<F> multiply(const Curve<F>& c, const MumfordDivisor<F>& D, unsigned long k)
{
    MumfordDivisor<F> result = MumfordDivisor<F>::identity();
    MumfordDivisor<F> base = D;
    for (; k != 0; k >>= 1) {
        if (k & 1UL) {
            result = add(c, result, base);
        }
        if (k > 1) {
            base = add(c, base, base);
        }
    }
    return result;
}

/// Least k in [1, bound] with k D = 0, by repeated addition; empty if none.
template <class F>
std::optional<std::size_t> order_of(const Curve<F>& c, const MumfordDivisor<F>& D, std::size_t bound)
{
    detail::require_hyperelliptic(c);
    if (bound < 1) {
        throw PreconditionError("order bound must be at least 1");
    }
    MumfordDivisor<F> multiple = D;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (multiple.is_identity()) {
            return k;
        }
        multiple = add(c, multiple, D);
    }
    return std::nullopt;
}

} // namespace torsion
