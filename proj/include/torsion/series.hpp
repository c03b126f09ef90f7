#pragma once

#include "torsion/poly.hpp"
#include "torsion/scalars.hpp"

namespace torsion {

/// Parameters of the truncation of (1+x)^(m/d) to its first E terms.
/// Invariants: d >= 2, m >= 1, gcd(m, d) = 1 (so m/d is not an integer),
/// E >= 2.
class TruncationSpec {
public:
    static TruncationSpec make(long m, long d, long E);

    long m() const { return m_; }
    long d() const { return d_; }
    long E() const { return E_; }
    Rational r() const { return Rational(mpz_class(m_), mpz_class(d_)); }

private:
    TruncationSpec(long m, long d, long E) : m_(m), d_(d), E_(E) {}

    long m_;
    long d_;
    long E_;
};

/// sum_{k<E} binom(r,k) x^k. Accepts any rational r and E >= 1; E = 1 gives
/// the constant 1.
QPoly truncated_binomial(const Rational& r, long E);
QPoly truncated_binomial(const TruncationSpec& spec);

/// (1+x)^m - V_{r,E}^d.
QPoly truncation_defect(const TruncationSpec& spec);

/// valuation_at_zero((1+x)^m - V^d). Requires m > d(E-1) (HypothesisError
/// otherwise); under that hypothesis the result is exactly E.
std::size_t check_truncation_valuation(const TruncationSpec& spec);

/// ((1+x)^m - V^d) / x^E, the degree m-E polynomial with nonzero constant
/// term and no repeated roots when m > d(E-1).
QPoly truncation_quotient(const TruncationSpec& spec);

struct MinusOneCheck {
    bool nonzero;
    PAdicValue valuation;
};

/// V_{r,E}(-1) together with its p-adic valuation for a prime p | d. The
/// valuation is negative, which rules out V_{r,E}(-1) = 0.
MinusOneCheck nonvanishing_at_minus_one(const TruncationSpec& spec, long p);

} // namespace torsion
