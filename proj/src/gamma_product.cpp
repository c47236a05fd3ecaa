#include "hyperverify/gamma_product.hpp"

#include <algorithm>

#include "hyperverify/errors.hpp"
#include "hyperverify/pochhammer.hpp"

namespace hyperverify {

GammaProduct::GammaProduct(std::initializer_list<Rational> numerator,
                           std::initializer_list<Rational> denominator)
{
    for (const auto& arg : numerator) {
        multiply(arg, 1);
    }
    for (const auto& arg : denominator) {
        multiply(arg, -1);
    }
}

GammaProduct& GammaProduct::multiply(const Rational& argument, int exponent)
{
    if (exponent == 0) {
        return *this;
    }
    auto [it, inserted] = factors_.try_emplace(argument, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0) {
            factors_.erase(it);
        }
    }
    return *this;
}

namespace {

struct ResidueClass {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
};

std::string gamma_name(const Rational& arg)
{
    return "Gamma(" + arg.to_string() + ")";
}

// Gamma(p)/Gamma(q) for p - q integral, taken as the limit along a common
// shift of both arguments.
Rational gamma_ratio(const Rational& p, const Rational& q)
{
    const std::int64_t k = (p - q).to_int64();
    if (k >= 0) {
        return pochhammer(q, static_cast<unsigned>(k));
    }
    Rational den = pochhammer(p, static_cast<unsigned>(-k));
    if (den.is_zero()) {
        throw PoleError("pole: " + gamma_name(p) + "/" + gamma_name(q) + " is infinite");
    }
    return Rational(1) / den;
}

}  // namespace

Rational gamma_simplify(const GammaProduct& product)
{
    // factors() is already cancelled across identical arguments.
    std::map<Rational, ResidueClass> classes;
    for (const auto& [arg, exponent] : product.factors()) {
        auto& cls = classes[arg.fractional_part()];
        auto& side = exponent > 0 ? cls.numerator : cls.denominator;
        side.insert(side.end(), static_cast<std::size_t>(std::abs(exponent)), arg);
    }

    Rational result(1);
    bool vanished = false;
    for (auto& [fraction, cls] : classes) {
        std::sort(cls.numerator.begin(), cls.numerator.end());
        std::sort(cls.denominator.begin(), cls.denominator.end());
        const std::size_t paired = std::min(cls.numerator.size(), cls.denominator.size());
        for (std::size_t i = 0; i < paired; ++i) {
            Rational r = gamma_ratio(cls.numerator[i], cls.denominator[i]);
            if (r.is_zero()) {
                vanished = true;
            } else {
                result *= r;
            }
        }
        auto leftover = [&](const std::vector<Rational>& side, bool numerator) {
            for (std::size_t i = paired; i < side.size(); ++i) {
                const Rational& arg = side[i];
                if (!fraction.is_zero()) {
                    throw TranscendentalResidue("unpaired " + gamma_name(arg) + " is not rational");
                }
                if (arg.is_nonpositive_integer()) {
                    throw PoleError("pole: " + gamma_name(arg) + " survives in the "
                                    + (numerator ? "numerator" : "denominator"));
                }
                Rational f = factorial(static_cast<unsigned>(arg.to_int64() - 1));
                if (numerator) {
                    result *= f;
                } else {
                    result /= f;
                }
            }
        };
        leftover(cls.numerator, true);
        leftover(cls.denominator, false);
    }
    return vanished ? Rational(0) : result;
}

}  // namespace hyperverify
