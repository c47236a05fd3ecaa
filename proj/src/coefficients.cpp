#include "hyperverify/coefficients.hpp"

#include <string>

#include "hyperverify/errors.hpp"

namespace hyperverify {

std::string_view to_string(TableEdition edition) noexcept
{
    return edition == TableEdition::printed ? "printed" : "corrected";
}

std::optional<TableEdition> parse_table_edition(std::string_view text) noexcept
{
    if (text == "printed") {
        return TableEdition::printed;
    }
    if (text == "corrected") {
        return TableEdition::corrected;
    }
    return std::nullopt;
}

void require_supported_j(int j)
{
    if (j < kMinJ || j > kMaxJ) {
        throw UnsupportedJ("j = " + std::to_string(j) + " is outside [-5, 5]");
    }
}

CoefficientTable::CoefficientTable(TableEdition edition, std::optional<TableMutation> mutation)
    : edition_(edition)
    , mutation_(std::move(mutation))
{
    if (mutation_) {
        require_supported_j(mutation_->j);
    }
}

Rational CoefficientTable::perturbation(int j, CoeffPart part) const
{
    if (mutation_ && mutation_->j == j && mutation_->part == part) {
        return mutation_->delta;
    }
    return Rational(0);
}

// Rows are written in the same grouping as the table so they can be checked
// against it by eye.
Rational CoefficientTable::A(int j, const Rational& b, std::int64_t n_) const
{
    require_supported_j(j);
    const Rational n(n_);
    const Rational one(1);
    Rational v;
    switch (j) {
    case 5: {
        const Rational u = one - b - 2 * n;
        v = -4 * u * u + 2 * (one - b) * u + (one - b) * (one - b) + 22 * u + 13 * b - 33;
        break;
    }
    case 4:
        v = 2 * (b + 1 + 2 * n) * (b + 3 + 2 * n) - b * (b + 3);
        break;
    case 3:
        v = b + 2 + 4 * n;
        break;
    case 2:
        v = -(b + 1 + 2 * n);
        break;
    case 1:
        v = Rational(-1);
        break;
    case 0:
        v = Rational(1);
        break;
    case -1:
        v = Rational(1);
        break;
    case -2:
        v = one - b - 2 * n;
        break;
    case -3:
        v = one - b - 4 * n;
        break;
    case -4:
        v = 2 * (one - b - 2 * n) * (3 - b - 2 * n) - (one - b) * (4 - b);
        break;
    case -5: {
        const Rational u = one - b - 2 * n;
        v = 4 * u * u - 2 * (one - b) * u - (one - b) * (one - b) + 8 * u + 7 * b - 7;
        break;
    }
    }
    return v + perturbation(j, CoeffPart::A);
}

Rational CoefficientTable::B(int j, const Rational& b, std::int64_t n_) const
{
    require_supported_j(j);
    const Rational n(n_);
    const Rational one(1);
    Rational v;
    switch (j) {
    case 5: {
        const Rational w = b + 2 * n;
        v = 4 * w * w - 2 * (one - b) * w - (one - b) * (one - b) + 34 * w + b + 61;
        break;
    }
    case 4:
        v = 4 * (b + 3 + 2 * n);
        break;
    case 3:
        v = -(3 * b + 6 + 4 * n);
        break;
    case 2:
        v = Rational(-2);
        break;
    case 1:
        v = Rational(1);
        break;
    case 0:
        v = Rational(0);
        break;
    case -1:
        v = Rational(1);
        break;
    case -2:
        v = Rational(2);
        break;
    case -3:
        v = 3 - 3 * b - 4 * n;
        break;
    case -4:
        v = 4 * (one - b - 2 * n);
        break;
    case -5: {
        const Rational w = b + 2 * n;
        const Rational tail = edition_ == TableEdition::printed ? Rational(-1) : Rational(11);
        v = 4 * w * w - 2 * (one - b) * w - (one - b) * (one - b) - 16 * w + b + tail;
        break;
    }
    }
    return v + perturbation(j, CoeffPart::B);
}

bool CoefficientTable::b_row_vanishes(int j) const
{
    require_supported_j(j);
    return j == 0 && perturbation(0, CoeffPart::B).is_zero();
}

Rational coeff_A(int j, const Rational& b, std::int64_t n)
{
    return CoefficientTable().A(j, b, n);
}

Rational coeff_B(int j, const Rational& b, std::int64_t n)
{
    return CoefficientTable().B(j, b, n);
}

std::int64_t bracket(const Rational& x)
{
    return x.floor();
}

int absval(int j) noexcept
{
    return j < 0 ? -j : j;
}

}  // namespace hyperverify
