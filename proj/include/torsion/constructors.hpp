#pragma once

#include <optional>

#include "torsion/certificate.hpp"
#include "torsion/curves.hpp"

namespace torsion {

/// A curve, a point of exact order m on it, and the certificate proving it.
struct Construction {
    Curve<Rational> curve;
    CertificatePoint point;
    TorsionCertificate certificate;
};

enum class ConstructionStyle { OrderD, OrderN, DivisibleByD, NPlusED };

inline constexpr long kDefaultSearchLimit = 64;

struct ConstructionRequest {
    long n = 0;
    long d = 0;
    long m = 0;
    /// Inferred from the verdict for (n, d, m) when empty.
    std::optional<ConstructionStyle> style;
    /// NPlusED only; derived from m when empty.
    std::optional<long> e;
    /// OrderN seeds: f = (x-a)^n + v^d. Default a = 0, v = 1.
    Rational a;
    std::optional<QPoly> v;
    /// DivisibleByD: number of C values tried before SearchExhausted.
    long search_limit = kDefaultSearchLimit;
};

/// Order d: f = x(x-1)...(x-n+1) and the branch point P = (0, 0).
Construction construct_order_d(long n, long d);
/// Order d at a given rational root w of the curve's f.
Construction construct_order_d(const Curve<Rational>& curve, const Rational& w);

/// Order n: f = (x-a)^n + v^d with d deg v <= n-1; P = (a, v(a)). RepeatedRootError
/// when f is not square-free, which includes every v with v(a) = 0.
Construction construct_order_n(long n, long d, const Rational& a, const QPoly& v);

/// Order m with d | m: f_C = -x^m + (x^l + D x^{n-m+l} + C)^d with
/// l = m/d and D = 1/d (so f_C is monic), trying C = 1, -1, 2, -2, ...
/// (skipping 0 and -D) until f_C is square-free. Requires n < m <= 2n and
/// n - m + l >= 0. For m = 2n (only possible for d = 2) that family
/// degenerates to order n, so u = x + C is searched instead:
/// x^n = Q u^2 + R, f = (u^2 - R)(Q + 1), P = (0, v(0)/u(0)) with
/// v = x^n/2 + u^2 - R, rejecting any C whose curve has an order-n point at 0.
Construction construct_div_d(long n, long d, long m, long search_limit = kDefaultSearchLimit);

/// Order m = n + e d: f = ((1+x)^m - V^d) / x^{ed} with V the truncation of
/// (1+x)^{m/d} to ed terms, P = (-1, lambda (-1)^e V(-1)) with lambda^d = -1.
/// Requires m > d(ed - 1) (HypothesisError). For d divisible by 4 lambda
/// lies outside Q(i) and the point is returned as symbolic.
Construction construct_n_plus_ed(long n, long d, long e);

/// Dispatches on the request style (or on the verdict when no style is
/// given). Unreachable and undecided triples raise PreconditionError
/// carrying the deciding rule.
Construction construct(const ConstructionRequest& request);

/// The affine point of a construction; UnsupportedField for symbolic points.
AffinePoint<GaussianRational> materialize_point(const Construction& c);

} // namespace torsion
