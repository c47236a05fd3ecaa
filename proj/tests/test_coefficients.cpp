#include "doctest.h"

#include "hyperverify/coefficients.hpp"
#include "hyperverify/errors.hpp"
#include "test_support.hpp"

using namespace hyperverify;
using hyperverify::testing::R;
using hyperverify::testing::RationalGen;

TEST_CASE("table anchors")
{
    CHECK(coeff_A(0, R(3, 7), 4) == R(1));
    CHECK(coeff_B(0, R(3, 7), 4) == R(0));
    CHECK(coeff_A(2, R(1), 0) == R(-2));
    CHECK(coeff_B(-3, R(1), 1) == R(-4));
    CHECK(coeff_A(5, R(1), 0) == R(-20));
}

TEST_CASE("property: constant rows")
{
    RationalGen gen(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational b = gen();
        const int n = gen.uniform_int(0, 30);
        CHECK(coeff_A(0, b, n) == R(1));
        CHECK(coeff_B(0, b, n) == R(0));
        CHECK(coeff_A(1, b, n) == R(-1));
        CHECK(coeff_B(1, b, n) == R(1));
        CHECK(coeff_A(-1, b, n) == R(1));
        CHECK(coeff_B(-1, b, n) == R(1));
        CHECK(coeff_B(2, b, n) == R(-2));
        CHECK(coeff_B(-2, b, n) == R(2));
    }
}

TEST_CASE("rows evaluate the printed polynomials")
{
    // Expanded by hand from the printed grouping.
    RationalGen gen(42);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational b = gen();
        const Rational n(gen.uniform_int(0, 20));
        CHECK(coeff_A(4, b, n.to_int64()) == b * b + 8 * b * n + 8 * n * n + 5 * b + 16 * n + 6);
        CHECK(coeff_A(-4, b, n.to_int64()) == b * b + 8 * b * n + 8 * n * n - 3 * b - 16 * n + 2);
        CHECK(coeff_A(3, b, n.to_int64()) == b + 2 + 4 * n);
        CHECK(coeff_B(3, b, n.to_int64()) == -3 * b - 6 - 4 * n);
        CHECK(coeff_B(4, b, n.to_int64()) == 4 * b + 12 + 8 * n);
        CHECK(coeff_B(-4, b, n.to_int64()) == 4 - 4 * b - 8 * n);
        CHECK(coeff_B(5, b, n.to_int64()) == 5 * b * b + 20 * b * n + 16 * n * n + 35 * b + 64 * n + 60);
        CHECK(coeff_B(-5, b, n.to_int64()) == 5 * b * b + 20 * b * n + 16 * n * n - 15 * b - 36 * n - 2);
        CHECK(coeff_A(5, b, n.to_int64()) == -b * b - 12 * b * n - 16 * n * n - 7 * b - 32 * n - 12);
        CHECK(coeff_A(-5, b, n.to_int64()) == b * b + 12 * b * n + 16 * n * n - 3 * b - 28 * n + 2);
    }
}

TEST_CASE("corrected edition differs only in the constant of B_-5")
{
    const CoefficientTable printed(TableEdition::printed);
    const CoefficientTable corrected(TableEdition::corrected);
    RationalGen gen(43);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational b = gen();
        const int n = gen.uniform_int(0, 10);
        for (int j = kMinJ; j <= kMaxJ; ++j) {
            CHECK(printed.A(j, b, n) == corrected.A(j, b, n));
            CHECK(printed.B(j, b, n) + (j == -5 ? R(12) : R(0)) == corrected.B(j, b, n));
        }
    }
}

TEST_CASE("mutations perturb exactly one entry")
{
    const CoefficientTable mutated(TableEdition::printed, TableMutation{3, CoeffPart::B, R(1)});
    CHECK(mutated.B(3, R(1, 2), 2) == coeff_B(3, R(1, 2), 2) + 1);
    CHECK(mutated.A(3, R(1, 2), 2) == coeff_A(3, R(1, 2), 2));
    CHECK(mutated.B(2, R(1, 2), 2) == coeff_B(2, R(1, 2), 2));
    CHECK(CoefficientTable().b_row_vanishes(0));
    CHECK_FALSE(CoefficientTable().b_row_vanishes(1));
    CHECK_FALSE(CoefficientTable(TableEdition::printed, TableMutation{0, CoeffPart::B, R(1)}).b_row_vanishes(0));
}

TEST_CASE("unsupported j")
{
    CHECK_THROWS_AS((void)coeff_A(6, R(1), 0), UnsupportedJ);
    CHECK_THROWS_AS((void)coeff_B(-6, R(1), 0), UnsupportedJ);
}

TEST_CASE("bracket and absval")
{
    CHECK(bracket(R(-1, 2)) == -1);
    CHECK(bracket(R(3)) == 3);
    CHECK(bracket(R(5, 2)) == 2);
    CHECK(absval(-5) == 5);
    CHECK(absval(4) == 4);
}
