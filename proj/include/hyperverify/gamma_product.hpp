#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hyperverify/rational.hpp"

namespace hyperverify {

/// Formal product of Gamma values, prod Gamma(arg)^exponent.
///
/// Entries with equal arguments are merged on insertion and entries whose
/// exponents cancel are dropped, so `factors()` never holds a zero exponent.
class GammaProduct {
public:
    GammaProduct() = default;
    GammaProduct(std::initializer_list<Rational> numerator,
                 std::initializer_list<Rational> denominator);

    GammaProduct& multiply(const Rational& argument, int exponent = 1);
    GammaProduct& divide(const Rational& argument, int exponent = 1)
    {
        return multiply(argument, -exponent);
    }

    [[nodiscard]] const std::map<Rational, int>& factors() const noexcept { return factors_; }
    [[nodiscard]] bool empty() const noexcept { return factors_.empty(); }

private:
    std::map<Rational, int> factors_;
};

/// Reduces a Gamma product to an exact rational.
///
/// Identical arguments cancel first. Remaining arguments are grouped by
/// class mod 1; within a class the sorted numerator and denominator lists are
/// paired smallest-first and each pair Gamma(q+k)/Gamma(q) becomes (q)_k or
/// 1/(p)_{-k}. A vanished Pochhammer in numerator position gives 0, in
/// denominator position a PoleError. Leftover Gamma(m) with m a positive
/// integer become (m-1)!.
///
/// Throws PoleError when a Gamma at a nonpositive integer survives, and
/// TranscendentalResidue when an unpaired non-integer argument remains.
[[nodiscard]] Rational gamma_simplify(const GammaProduct& product);

}  // namespace hyperverify
