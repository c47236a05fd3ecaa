#include "hyperverify/hyper.hpp"

#include <algorithm>

#include "hyperverify/errors.hpp"

namespace hyperverify {

namespace {

// Ratio term_{n+1}/term_n without the coefficient and argument factors.
// Denominators were checked nonzero by the caller.
mpq_class pochhammer_step(std::span<const Rational> numerators,
                          std::span<const Rational> denominators,
                          unsigned n, bool divide_by_factorial)
{
    mpq_class r(1);
    const mpq_class shift(n);
    for (const auto& a : numerators) {
        r *= a.raw() + shift;
    }
    for (const auto& b : denominators) {
        r /= b.raw() + shift;
    }
    if (divide_by_factorial) {
        r /= n + 1;
    }
    return r;
}

std::string describe_pole(const Rational& den, unsigned last_term)
{
    return "denominator parameter " + den.to_string() + " vanishes before the series stops at n = "
           + std::to_string(last_term);
}

}  // namespace

std::optional<unsigned> termination_index(std::span<const Rational> numerators)
{
    std::optional<unsigned> m;
    for (const auto& a : numerators) {
        if (a.is_nonpositive_integer()) {
            const auto k = static_cast<unsigned>(-a.to_int64());
            m = m ? std::min(*m, k) : k;
        }
    }
    return m;
}

void check_denominators(std::span<const Rational> denominators, unsigned last_term)
{
    for (const auto& b : denominators) {
        // (b)_n with b = -k vanishes for n >= k + 1.
        if (b.is_nonpositive_integer() && static_cast<std::uint64_t>(-b.to_int64()) < last_term) {
            throw DenominatorPoleBeforeTermination(describe_pole(b, last_term));
        }
    }
}

bool is_well_posed(const HyperSpec& h)
{
    const auto m = termination_index(h);
    for (const auto& b : h.denominators) {
        if (b.is_nonpositive_integer() && (!m || static_cast<std::uint64_t>(-b.to_int64()) < *m)) {
            return false;
        }
    }
    return true;
}

Rational eval_terminating(const HyperSpec& h)
{
    const auto m = termination_index(h);
    if (!m) {
        throw NonTerminating("no nonpositive-integer numerator parameter");
    }
    check_denominators(h.denominators, *m);
    mpq_class term(1);
    mpq_class sum(1);
    for (unsigned n = 0; n < *m; ++n) {
        term *= pochhammer_step(h.numerators, h.denominators, n, true);
        term *= h.argument.raw();
        sum += term;
    }
    return Rational(std::move(sum));
}

TruncatedSeries series_in_z(std::span<const Rational> numerators,
                            std::span<const Rational> denominators,
                            unsigned order)
{
    const auto m = termination_index(numerators);
    const unsigned last = m ? std::min(*m, order) : order;
    check_denominators(denominators, last);
    std::vector<Rational> c(order + 1);
    mpq_class term(1);
    c[0] = Rational(1);
    for (unsigned n = 0; n < last; ++n) {
        term *= pochhammer_step(numerators, denominators, n, true);
        c[n + 1] = Rational(term);
    }
    return TruncatedSeries(std::move(c));
}

Rational eval_weighted_sum(const WeightedSumSpec& w, unsigned up_to)
{
    check_denominators(w.denominators, up_to);
    const mpq_class z_step = pow(w.argument, w.power_step).raw();
    mpq_class ratio_part = pow(w.argument, w.power_offset).raw();
    mpq_class sum(0);
    for (unsigned n = 0;; ++n) {
        if (sgn(ratio_part) == 0) {
            break;
        }
        sum += w.coefficient(n).raw() * ratio_part;
        if (n == up_to) {
            break;
        }
        ratio_part *= pochhammer_step(w.numerators, w.denominators, n, w.divide_by_factorial);
        ratio_part *= z_step;
    }
    return Rational(std::move(sum));
}

Rational eval_weighted_sum(const WeightedSumSpec& w)
{
    const auto m = termination_index(w.numerators);
    if (!m) {
        throw NonTerminating("weighted sum has no nonpositive-integer numerator parameter");
    }
    return eval_weighted_sum(w, *m);
}

TruncatedSeries weighted_series(const WeightedSumSpec& w, unsigned order)
{
    std::vector<Rational> c(order + 1);
    if (w.power_offset > order) {
        return TruncatedSeries(std::move(c));
    }
    const unsigned step = std::max(1u, w.power_step);
    unsigned last = (order - w.power_offset) / step;
    if (const auto m = termination_index(w.numerators)) {
        last = std::min(last, *m);
    }
    check_denominators(w.denominators, last);
    mpq_class ratio_part(1);
    for (unsigned n = 0; n <= last; ++n) {
        if (n > 0) {
            ratio_part *= pochhammer_step(w.numerators, w.denominators, n - 1, w.divide_by_factorial);
        }
        c[w.power_offset + w.power_step * n] += w.coefficient(n) * Rational(ratio_part);
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace hyperverify
