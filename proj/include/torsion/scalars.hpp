#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace torsion {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator, so equality is field-wise.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {} // NOLINT: implicit by design of the field tower
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(const mpz_class& value) : q_(value) {}

    /// Parses "p" or "p/q" (decimal, optional leading minus).
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const;
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Q(i): a fixed quadratic extension of the rationals by a square root of -1.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {} // NOLINT
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_rational() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2; zero iff the value is zero.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;
    std::string to_string() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// p-adic valuation: a finite integer, or +infinity (only for zero).
class PAdicValue {
public:
    static PAdicValue infinity() { return PAdicValue(true, 0); }
    static PAdicValue finite(long v) { return PAdicValue(false, v); }

    bool is_infinite() const { return infinite_; }
    /// Undefined for +infinity; check is_infinite() first.
    long value() const { return value_; }

    friend bool operator==(const PAdicValue&, const PAdicValue&) = default;

private:
    PAdicValue(bool infinite, long value) : infinite_(infinite), value_(value) {}

    bool infinite_;
    long value_;
};

std::ostream& operator<<(std::ostream& os, const PAdicValue& v);

/// Falling-factorial binomial r(r-1)...(r-k+1)/k!.
Rational gen_binom(const Rational& r, unsigned k);

/// v_p(numerator) - v_p(denominator); +infinity for zero. Throws InvalidInput
/// when p is not prime.
PAdicValue padic_valuation(const Rational& q, long p);

bool is_prime(long p);

/// Integer power with a possibly negative exponent. Throws on 0^negative.
Rational pow(const Rational& base, long exponent);
GaussianRational pow(const GaussianRational& base, long exponent);

} // namespace torsion
