#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperverify {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor and operation
/// leaves the value canonical, so structural equality is numeric equality.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" (optional leading '-', decimal digits, q != 0).
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const noexcept;
    /// Integer and <= 0; the poles of Gamma.
    [[nodiscard]] bool is_nonpositive_integer() const noexcept;
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }

    /// Greatest integer <= value. Throws std::overflow_error beyond int64.
    [[nodiscard]] std::int64_t floor() const;
    /// Value as int64; requires is_integer().
    [[nodiscard]] std::int64_t to_int64() const;
    /// Representative of the class mod 1, in [0, 1).
    [[nodiscard]] Rational fractional_part() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

/// Integer power with nonnegative exponent.
[[nodiscard]] Rational pow(const Rational& base, unsigned exponent);
[[nodiscard]] Rational factorial(unsigned n);

}  // namespace hyperverify

template <>
struct std::hash<hyperverify::Rational> {
    std::size_t operator()(const hyperverify::Rational& r) const noexcept;
};
