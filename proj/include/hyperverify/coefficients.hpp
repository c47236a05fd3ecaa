#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hyperverify/rational.hpp"

namespace hyperverify {

inline constexpr int kMinJ = -5;
inline constexpr int kMaxJ = 5;

/// Which of the two polynomials of a table row.
enum class CoeffPart { A, B };

/// Source of the A_j/B_j polynomials.
///
/// `printed` reproduces the published table verbatim. `corrected` differs in
/// exactly one place: the constant term of B_{-5} is +11 instead of -1, the
/// value forced by matching the series coefficients of the j = -5
/// transformation (see tests/test_identities.cpp).
enum class TableEdition { printed, corrected };

[[nodiscard]] std::string_view to_string(TableEdition edition) noexcept;
[[nodiscard]] std::optional<TableEdition> parse_table_edition(std::string_view text) noexcept;

/// A single additive perturbation of one table entry, used for mutation testing.
struct TableMutation {
    int j = 0;
    CoeffPart part = CoeffPart::A;
    Rational delta{1};
};

/// The coefficient table: A_j(b, n) and B_j(b, n) for j in [-5, 5].
class CoefficientTable {
public:
    CoefficientTable() = default;
    explicit CoefficientTable(TableEdition edition, std::optional<TableMutation> mutation = std::nullopt);

    /// Throw UnsupportedJ outside [-5, 5].
    [[nodiscard]] Rational A(int j, const Rational& b, std::int64_t n) const;
    [[nodiscard]] Rational B(int j, const Rational& b, std::int64_t n) const;

    /// True when the B_j row is the zero polynomial (only j = 0, unmutated).
    [[nodiscard]] bool b_row_vanishes(int j) const;

    [[nodiscard]] TableEdition edition() const noexcept { return edition_; }
    [[nodiscard]] const std::optional<TableMutation>& mutation() const noexcept { return mutation_; }

private:
    [[nodiscard]] Rational perturbation(int j, CoeffPart part) const;

    TableEdition edition_ = TableEdition::printed;
    std::optional<TableMutation> mutation_;
};

/// Printed-table shorthands.
[[nodiscard]] Rational coeff_A(int j, const Rational& b, std::int64_t n);
[[nodiscard]] Rational coeff_B(int j, const Rational& b, std::int64_t n);

/// [x], the greatest integer <= x.
[[nodiscard]] std::int64_t bracket(const Rational& x);
[[nodiscard]] int absval(int j) noexcept;

/// Throws UnsupportedJ unless kMinJ <= j <= kMaxJ.
void require_supported_j(int j);

}  // namespace hyperverify
