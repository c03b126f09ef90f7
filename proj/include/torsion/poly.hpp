#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "torsion/errors.hpp"
#include "torsion/scalars.hpp"

namespace torsion {

/// Dense univariate polynomial over an exact field F, coefficients in
/// ascending order with no trailing zeros. The zero polynomial has no degree
/// (`degree()` is empty) rather than a numeric sentinel.
template <class F>
class Poly {
public:
    using field_type = F;

    Poly() = default;
    explicit Poly(std::vector<F> coefficients) : c_(std::move(coefficients)) { trim(); }
    Poly(std::initializer_list<F> coefficients) : c_(coefficients) { trim(); }

    static Poly constant(F value) { return Poly(std::vector<F>{std::move(value)}); }
    static Poly monomial(F value, std::size_t k)
    {
        std::vector<F> c(k + 1);
        c[k] = std::move(value);
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(F(1), 1); }
    /// x - a
    static Poly linear_root(const F& a) { return Poly({-a, F(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::optional<std::size_t> degree() const
    {
        if (c_.empty()) {
            return std::nullopt;
        }
        return c_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const
    {
        if (c_.empty()) {
            throw InvalidInput("degree of the zero polynomial");
        }
        return c_.size() - 1;
    }

    const std::vector<F>& coefficients() const { return c_; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(); }
    F leading() const { return c_.empty() ? F() : c_.back(); }

    /// Horner evaluation.
    F operator()(const F& at) const
    {
        F acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + *it;
        }
        return acc;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.c_) {
            c = -c;
        }
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        trim();
        return *this;
    }
    Poly& operator*=(const F& s)
    {
        if (s == F()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) {
            c *= s;
        }
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<F> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F()) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == F()) {
            c_.pop_back();
        }
    }

    std::vector<F> c_;
};

template <class F>
struct DivRem {
    Poly<F> quotient;
    Poly<F> remainder;
};

/// Euclidean division; g must be nonzero.
template <class F>
DivRem<F> divrem(const Poly<F>& f, const Poly<F>& g)
{
    if (g.is_zero()) {
        throw PreconditionError("polynomial division by zero");
    }
    std::vector<F> r = f.coefficients();
    const std::size_t dg = g.deg();
    if (r.size() <= dg) {
        return {Poly<F>(), f};
    }
    std::vector<F> q(r.size() - dg);
    const F inv_lead = F(1) / g.leading();
    const auto& gc = g.coefficients();
    for (std::size_t k = r.size(); k-- > dg;) {
        if (r[k] == F()) {
            continue;
        }
        F t = r[k] * inv_lead;
        for (std::size_t j = 0; j <= dg; ++j) {
            r[k - dg + j] -= t * gc[j];
        }
        q[k - dg] = std::move(t);
    }
    r.resize(dg);
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& f, const Poly<F>& g)
{
    return divrem(f, g).remainder;
}

/// Quotient q with q*g == f; a nonzero remainder raises DivisibilityError.
template <class F>
Poly<F> exact_div(const Poly<F>& f, const Poly<F>& g)
{
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) {
        throw DivisibilityError("division leaves a nonzero remainder");
    }
    return q;
}

template <class F>
Poly<F> derivative(const Poly<F>& f)
{
    const auto& c = f.coefficients();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<F> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        d[k - 1] = c[k] * F(static_cast<long>(k));
    }
    return Poly<F>(std::move(d));
}

template <class F>
Poly<F> make_monic(const Poly<F>& f)
{
    if (f.is_zero()) {
        return f;
    }
    return f * (F(1) / f.leading());
}

template <class F>
bool is_monic(const Poly<F>& f)
{
    return !f.is_zero() && f.leading() == F(1);
}

template <class F>
Poly<F> pow(const Poly<F>& base, unsigned long exponent)
{
    Poly<F> result = Poly<F>::constant(F(1));
    Poly<F> b = base;
    for (; exponent != 0; exponent >>= 1) {
        if (exponent & 1UL) {
            result *= b;
        }
        if (exponent > 1) {
            b *= b;
        }
    }
    return result;
}

/// Monic gcd by Euclidean remainders, each remainder made monic to keep
/// coefficient growth in check.
template <class F>
Poly<F> gcd(Poly<F> f, Poly<F> g)
{
    if (f.is_zero() && g.is_zero()) {
        throw PreconditionError("gcd of two zero polynomials");
    }
    f = make_monic(f);
    g = make_monic(g);
    while (!g.is_zero()) {
        Poly<F> r = make_monic(f % g);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

template <class F>
struct ExtendedGcd {
    Poly<F> gcd; ///< monic
    Poly<F> s;   ///< s*f + t*g == gcd
    Poly<F> t;
};

template <class F>
ExtendedGcd<F> xgcd(const Poly<F>& f, const Poly<F>& g)
{
    if (f.is_zero() && g.is_zero()) {
        throw PreconditionError("gcd of two zero polynomials");
    }
    Poly<F> r0 = f, r1 = g;
    Poly<F> s0 = Poly<F>::constant(F(1)), s1;
    Poly<F> t0, t1 = Poly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly<F> s2 = s0 - q * s1;
        Poly<F> t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    F scale = F(1) / r0.leading();
    return {r0 * scale, s0 * scale, t0 * scale};
}

/// Characteristic-zero square-free test: gcd(f, f') is constant.
template <class F>
bool is_squarefree(const Poly<F>& f)
{
    if (f.is_constant()) {
        throw PreconditionError("square-free test of a constant polynomial");
    }
    return gcd(f, derivative(f)).deg() == 0;
}

/// Index of the first nonzero coefficient.
template <class F>
std::size_t valuation_at_zero(const Poly<F>& f)
{
    if (f.is_zero()) {
        throw PreconditionError("valuation of the zero polynomial");
    }
    const auto& c = f.coefficients();
    std::size_t k = 0;
    while (c[k] == F()) {
        ++k;
    }
    return k;
}

/// f(x + a), re-expanded by Horner's scheme on the shifted variable.
template <class F>
Poly<F> shift(const Poly<F>& f, const F& a)
{
    if (a == F()) {
        return f;
    }
    const Poly<F> x_plus_a({a, F(1)});
    Poly<F> acc;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x_plus_a + Poly<F>::constant(*it);
    }
    return acc;
}

/// f(s*x).
template <class F>
Poly<F> scale_argument(const Poly<F>& f, const F& s)
{
    std::vector<F> c = f.coefficients();
    F power(1);
    for (auto& coefficient : c) {
        coefficient *= power;
        power *= s;
    }
    return Poly<F>(std::move(c));
}

/// Coefficient-wise embedding into a larger field (e.g. Q into Q(i)).
template <class G, class F>
Poly<G> promote(const Poly<F>& f)
{
    std::vector<G> c;
    c.reserve(f.coefficients().size());
    for (const auto& coefficient : f.coefficients()) {
        c.emplace_back(coefficient);
    }
    return Poly<G>(std::move(c));
}

/// Monic d-th root of a monic polynomial, if one exists. The root is unique
/// and its coefficients are determined top-down by a triangular system.
template <class F>
std::optional<Poly<F>> monic_root(const Poly<F>& g, unsigned d)
{
    if (!is_monic(g) || d == 0 || g.deg() % d != 0) {
        return std::nullopt;
    }
    const std::size_t k = g.deg() / d;
    std::vector<F> h(k + 1);
    h[k] = F(1);
    const F inv_d = F(1) / F(static_cast<long>(d));
    for (std::size_t j = 1; j <= k; ++j) {
        // coefficient of x^{dk-j} in h^d depends linearly on h[k-j] with
        // factor d; everything above it is already fixed.
        h[k - j] = F();
        Poly<F> trial = pow(Poly<F>(h), d);
        h[k - j] = (g.coeff(d * k - j) - trial.coeff(d * k - j)) * inv_d;
    }
    Poly<F> root(std::move(h));
    if (pow(root, d) != g) {
        return std::nullopt;
    }
    return root;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& f)
{
    if (f.is_zero()) {
        return os << "0";
    }
    const auto& c = f.coefficients();
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == F()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        bool unit = c[k] == F(1);
        if (!unit || k == 0) {
            os << "(" << c[k] << ")";
        }
        if (k > 0) {
            os << (unit ? "" : "*") << "x";
            if (k > 1) {
                os << "^" << k;
            }
        }
    }
    return os;
}

using QPoly = Poly<Rational>;
using GPoly = Poly<GaussianRational>;

} // namespace torsion
