#pragma once

#include "hyperverify/rational.hpp"

namespace hyperverify {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
[[nodiscard]] Rational pochhammer(const Rational& a, unsigned n);

/// (d)_{2n} evaluated through the duplication form 4^n (d/2)_n ((d+1)/2)_n.
[[nodiscard]] Rational pochhammer_duplication(const Rational& d, unsigned n);

}  // namespace hyperverify
