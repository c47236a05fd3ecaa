#include <algorithm>

#include "doctest.h"

#include "hyperverify/coefficients.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/hyper.hpp"
#include "test_support.hpp"

using namespace hyperverify;
using hyperverify::testing::Q;
using hyperverify::testing::R;
using hyperverify::testing::RationalGen;

TEST_CASE("termination index")
{
    const std::vector<Rational> a{R(1, 2), R(-3)};
    CHECK(termination_index(a) == 3u);
    const std::vector<Rational> b{R(-2), R(-5)};
    CHECK(termination_index(b) == 2u);
    const std::vector<Rational> c{R(1, 2), R(2)};
    CHECK_FALSE(termination_index(c).has_value());
}

TEST_CASE("eval_terminating examples")
{
    CHECK(eval_terminating({{R(0), R(7, 3)}, {R(-1, 2)}, R(5)}) == R(1));
    CHECK(eval_terminating({{R(-1), R(2)}, {R(3)}, R(2)}) == R(-1, 3));
    CHECK(eval_terminating({{R(-2), R(1), R(1)}, {R(2), R(-3)}, R(2)}) == R(19, 9));
    CHECK(eval_terminating({{R(-1), R(-1, 2), R(1, 2), R(1)}, {R(3, 2), R(3, 2), R(2)}, R(1)}) == R(19, 18));
}

TEST_CASE("pole legality")
{
    // denominator -3 vanishes from n = 4 on; a series stopping at 3 is fine, at 4 is not
    CHECK_NOTHROW((void)eval_terminating({{R(-3)}, {R(-3)}, R(1)}));
    CHECK_THROWS_AS((void)eval_terminating({{R(-4)}, {R(-3)}, R(1)}), DenominatorPoleBeforeTermination);
    CHECK(is_well_posed({{R(-3)}, {R(-3)}, R(1)}));
    CHECK_FALSE(is_well_posed({{R(-4)}, {R(-3)}, R(1)}));
    CHECK_FALSE(is_well_posed({{R(1, 2)}, {R(0)}, R(1)}));
    CHECK_THROWS_AS((void)eval_terminating({{R(1, 2)}, {R(3)}, R(1)}), NonTerminating);
}

TEST_CASE("series_in_z examples")
{
    const std::vector<Rational> num{R(-2), R(1)};
    const std::vector<Rational> den{R(2)};
    CHECK(series_in_z(num, den, 3) == TruncatedSeries({R(1), R(-1), R(1, 3), R(0)}));
    const auto exp = series_in_z({}, {}, 8);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(exp[n].raw() == 1 / testing::naive_factorial(n));
    }
    const std::vector<Rational> zero{R(0), R(5, 7)};
    CHECK(series_in_z(zero, den, 4) == TruncatedSeries::constant(R(1), 4));
    // a pole beyond the truncation order is harmless
    const std::vector<Rational> bad_den{R(-5)};
    CHECK_NOTHROW((void)series_in_z(num, bad_den, 3));
    const std::vector<Rational> free_num{R(1, 2)};
    CHECK_THROWS_AS((void)series_in_z(free_num, bad_den, 8), DenominatorPoleBeforeTermination);
}

TEST_CASE("weighted sums")
{
    const std::vector<Rational> num{R(-1), R(-1, 2), R(1, 2), R(1)};
    const std::vector<Rational> den{R(3, 2), R(3, 2), R(2)};
    WeightedSumSpec w{[](std::int64_t) { return Rational(1); }, num, den};
    CHECK(eval_weighted_sum(w) == eval_terminating({num, den, R(1)}));
    w.coefficient = [](std::int64_t) { return Rational(0); };
    CHECK(eval_weighted_sum(w) == R(0));
}

TEST_CASE("weighted A_2 sum equals the absorbed 5F4 form")
{
    // a=-1, b=1, d=1, e=4: -(b+1+2n)/(b+1) = (b/2+3/2)_n / (b/2+1/2)_n
    const Rational a = R(-1), b = R(1), d = R(1), e = R(4);
    const Rational h = R(1, 2);
    WeightedSumSpec w;
    w.coefficient = [b](std::int64_t n) { return coeff_A(2, b, n); };
    w.numerators = {a, a + h, b + 1, d / 2, d / 2 + h};
    w.denominators = {b + 1, b + 1 + h, e / 2, e / 2 + h};
    const Rational weighted = eval_weighted_sum(w);
    const Rational absorbed = -(b + 1) * eval_terminating({{a, a + h, b / 2 + 3 * h, d / 2, d / 2 + h},
                                                           {b / 2 + h, b + 3 * h, e / 2, e / 2 + h},
                                                           R(1)});
    CHECK(weighted == absorbed);
    // and both match the direct summation of the weighted terms
    mpq_class oracle(0);
    for (unsigned n = 0; n <= 1; ++n) {
        mpq_class t = coeff_A(2, b, n).raw();
        for (const auto& x : w.numerators) {
            t *= testing::naive_pochhammer(x.raw(), n);
        }
        for (const auto& x : w.denominators) {
            t /= testing::naive_pochhammer(x.raw(), n);
        }
        oracle += t / testing::naive_factorial(n);
    }
    CHECK(weighted.raw() == oracle);
}

namespace {

HyperSpec random_terminating(RationalGen& gen)
{
    HyperSpec h;
    const int p = gen.uniform_int(1, 4);
    const int q = gen.uniform_int(0, 3);
    h.numerators.push_back(R(-gen.uniform_int(0, 12)));
    for (int i = 1; i < p; ++i) {
        h.numerators.push_back(gen());
    }
    for (int i = 0; i < q; ++i) {
        h.denominators.push_back(gen.non_integer());
    }
    std::shuffle(h.numerators.begin(), h.numerators.end(), gen.engine());
    h.argument = gen();
    return h;
}

std::vector<mpq_class> raw(const std::vector<Rational>& xs)
{
    std::vector<mpq_class> out;
    for (const auto& x : xs) {
        out.push_back(x.raw());
    }
    return out;
}

}  // namespace

TEST_CASE("property: terminating evaluation against independent recomputation")
{
    RationalGen gen(31);
    for (int trial = 0; trial < 300; ++trial) {
        HyperSpec h = random_terminating(gen);
        const unsigned m = *termination_index(h);
        const Rational value = eval_terminating(h);

        // recompute-from-scratch path
        CHECK(value.raw() == testing::naive_hyper_sum(raw(h.numerators), raw(h.denominators), h.argument.raw(), m));

        // series coefficients times powers of the argument
        const auto s = series_in_z(h.numerators, h.denominators, m + 3);
        Rational via_series(0);
        for (unsigned n = 0; n <= s.order(); ++n) {
            via_series += s[n] * pow(h.argument, n);
        }
        CHECK(via_series == value);

        // reversed summation order
        Rational reversed(0);
        for (unsigned n = m + 1; n-- > 0;) {
            reversed += s[n] * pow(h.argument, n);
        }
        CHECK(reversed == value);

        // parameter order is irrelevant
        HyperSpec shuffled = h;
        std::shuffle(shuffled.numerators.begin(), shuffled.numerators.end(), gen.engine());
        std::shuffle(shuffled.denominators.begin(), shuffled.denominators.end(), gen.engine());
        CHECK(eval_terminating(shuffled) == value);
    }
}
