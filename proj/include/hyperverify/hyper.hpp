#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperverify/rational.hpp"
#include "hyperverify/series.hpp"

namespace hyperverify {

/// A pFq instance: sum over n of prod (num_i)_n / prod (den_j)_n * z^n / n!.
struct HyperSpec {
    std::vector<Rational> numerators;
    std::vector<Rational> denominators;
    Rational argument{1};
};

/// Smallest M such that every term beyond n = M carries a vanished numerator
/// Pochhammer; empty when no numerator is a nonpositive integer.
[[nodiscard]] std::optional<unsigned> termination_index(std::span<const Rational> numerators);
[[nodiscard]] inline std::optional<unsigned> termination_index(const HyperSpec& h)
{
    return termination_index(h.numerators);
}

/// Throws DenominatorPoleBeforeTermination if some (den)_n vanishes for an
/// n <= last_term.
void check_denominators(std::span<const Rational> denominators, unsigned last_term);

/// Parameter-legality rule for pFq: a nonpositive-integer denominator is only
/// allowed when the series stops before its Pochhammer vanishes.
[[nodiscard]] bool is_well_posed(const HyperSpec& h);

/// Exact value of a terminating series. Throws NonTerminating when
/// termination_index is empty, DenominatorPoleBeforeTermination on an
/// illegal denominator.
[[nodiscard]] Rational eval_terminating(const HyperSpec& h);

/// Coefficients c_n = prod (num)_n / (prod (den)_n n!) for n <= order, the
/// argument kept symbolic.
[[nodiscard]] TruncatedSeries series_in_z(std::span<const Rational> numerators,
                                          std::span<const Rational> denominators,
                                          unsigned order);

/// A hypergeometric-type sum whose term n carries an extra factor
/// coefficient(n) and sits at argument power power_step*n + power_offset:
///
///   term_n = coefficient(n) * prod (num)_n / (prod (den)_n [n!]) * z^(step*n + offset)
struct WeightedSumSpec {
    std::function<Rational(std::int64_t)> coefficient;
    std::vector<Rational> numerators;
    std::vector<Rational> denominators;
    Rational argument{1};
    unsigned power_step = 1;
    unsigned power_offset = 0;
    bool divide_by_factorial = true;
};

/// Exact sum of terms n = 0..up_to.
[[nodiscard]] Rational eval_weighted_sum(const WeightedSumSpec& w, unsigned up_to);

/// Sum to the numerators' termination index; throws NonTerminating otherwise.
[[nodiscard]] Rational eval_weighted_sum(const WeightedSumSpec& w);

/// The weighted sum as a series in a symbolic argument: term n is placed at
/// x^(step*n + offset), truncated at `order`. `argument` is ignored.
[[nodiscard]] TruncatedSeries weighted_series(const WeightedSumSpec& w, unsigned order);

}  // namespace hyperverify
