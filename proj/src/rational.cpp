#include "hyperverify/rational.hpp"
#include "hyperverify/pochhammer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace hyperverify {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

std::int64_t checked_int64(const mpz_class& z)
{
    if (!z.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    }
    return z.get_si();
}

}  // namespace

Rational::Rational(std::int64_t value)
    : value_(static_cast<long>(value))
{
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value)
    : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("not a rational literal: \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

bool Rational::is_integer() const noexcept
{
    return value_.get_den() == 1;
}

bool Rational::is_nonpositive_integer() const noexcept
{
    return is_integer() && sgn(value_) <= 0;
}

std::int64_t Rational::floor() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return checked_int64(q);
}

std::int64_t Rational::to_int64() const
{
    if (!is_integer()) {
        throw std::domain_error("Rational::to_int64 on non-integer " + to_string());
    }
    return checked_int64(value_.get_num());
}

Rational Rational::fractional_part() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(value_ - mpq_class(q));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational pow(const Rational& base, unsigned exponent)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational pochhammer(const Rational& a, unsigned n)
{
    mpq_class product(1);
    mpq_class factor = a.raw();
    for (unsigned k = 0; k < n; ++k) {
        product *= factor;
        if (sgn(product) == 0) {
            break;
        }
        factor += 1;
    }
    return Rational(std::move(product));
}

Rational pochhammer_duplication(const Rational& d, unsigned n)
{
    const Rational half(1, 2);
    return pow(Rational(4), n) * pochhammer(d * half, n) * pochhammer((d + 1) * half, n);
}

}  // namespace hyperverify

std::size_t std::hash<hyperverify::Rational>::operator()(const hyperverify::Rational& r) const noexcept
{
    return std::hash<std::string>{}(r.to_string());
}
