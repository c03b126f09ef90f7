#include "torsion/scalars.hpp"

#include <ostream>

#include "torsion/errors.hpp"

namespace torsion {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-') {
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw InvalidInput("inverse of zero");
    }
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw InvalidInput("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const
{
    return q_.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.to_string();
}

GaussianRational GaussianRational::inverse() const
{
    Rational n = norm();
    if (n.is_zero()) {
        throw InvalidInput("inverse of zero");
    }
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const
{
    if (im_.is_zero()) {
        return re_.to_string();
    }
    std::string s;
    if (!re_.is_zero()) {
        s = re_.to_string() + (im_.sign() > 0 ? "+" : "");
    }
    return s + im_.to_string() + "*i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
{
    return os << z.to_string();
}

std::ostream& operator<<(std::ostream& os, const PAdicValue& v)
{
    if (v.is_infinite()) {
        return os << "+inf";
    }
    return os << v.value();
}

Rational gen_binom(const Rational& r, unsigned k)
{
    Rational result(1);
    for (unsigned i = 0; i < k; ++i) {
        result *= (r - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    }
    return result;
}

bool is_prime(long p)
{
    if (p < 2) {
        return false;
    }
    for (long q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

namespace {

long mpz_valuation(mpz_class z, const mpz_class& p)
{
    long v = 0;
    while (mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

} // namespace

PAdicValue padic_valuation(const Rational& q, long p)
{
    if (!is_prime(p)) {
        throw InvalidInput(std::to_string(p) + " is not prime");
    }
    if (q.is_zero()) {
        return PAdicValue::infinity();
    }
    mpz_class prime(p);
    return PAdicValue::finite(mpz_valuation(q.numerator(), prime)
                              - mpz_valuation(q.denominator(), prime));
}

namespace {

template <class T>
T pow_impl(const T& base, long exponent)
{
    if (exponent < 0) {
        return pow_impl(base.inverse(), -exponent);
    }
    T result(1);
    T b = base;
    for (auto e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if (e & 1UL) {
            result *= b;
        }
        if (e > 1) {
            b *= b;
        }
    }
    return result;
}

} // namespace

Rational pow(const Rational& base, long exponent)
{
    return pow_impl(base, exponent);
}

GaussianRational pow(const GaussianRational& base, long exponent)
{
    return pow_impl(base, exponent);
}

} // namespace torsion
