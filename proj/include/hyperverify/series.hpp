#pragma once

#include <span>
#include <vector>

#include "hyperverify/rational.hpp"

namespace hyperverify {

/// Formal power series in one variable known through x^order inclusive.
///
/// Coefficients are stored densely. Binary operations truncate to the smaller
/// order of their operands, and equality compares up to the common order only.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(unsigned order);
    /// Takes coefficients c_0..c_order; the order is size() - 1 (size must be >= 1).
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    static TruncatedSeries constant(const Rational& c, unsigned order);
    /// x^power, or zero when power > order.
    static TruncatedSeries monomial(unsigned power, unsigned order, const Rational& c = Rational(1));

    [[nodiscard]] unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    [[nodiscard]] const Rational& operator[](unsigned n) const { return coeffs_.at(n); }
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    [[nodiscard]] TruncatedSeries truncate(unsigned order) const;
    /// Index of the first coefficient where the two differ up to the common
    /// order, or -1 if they agree.
    [[nodiscard]] int first_difference(const TruncatedSeries& other) const;

    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g)
    {
        return f.first_difference(g) < 0;
    }

private:
    std::vector<Rational> coeffs_;
};

[[nodiscard]] TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
[[nodiscard]] TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
[[nodiscard]] TruncatedSeries scale(const Rational& c, const TruncatedSeries& f);

/// (1 - x)^{-alpha} = sum (alpha)_n x^n / n!.
[[nodiscard]] TruncatedSeries binomial_series(const Rational& alpha, unsigned order);

/// f(g(x)) by Horner accumulation; throws NonzeroConstantTerm unless g(0) = 0.
[[nodiscard]] TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// -2x/(1-x) = -2x - 2x^2 - ...
[[nodiscard]] TruncatedSeries mobius_arg(unsigned order);

}  // namespace hyperverify
