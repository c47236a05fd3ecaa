#include "hyperverify/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperverify/errors.hpp"
#include "hyperverify/pochhammer.hpp"

namespace hyperverify {

TruncatedSeries::TruncatedSeries(unsigned order)
    : coeffs_(static_cast<std::size_t>(order) + 1, Rational(0))
{
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(unsigned power, unsigned order, const Rational& c)
{
    TruncatedSeries s(order);
    if (power <= order) {
        s.coeffs_[power] = c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncate(unsigned order) const
{
    const unsigned n = std::min(order, this->order());
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

int TruncatedSeries::first_difference(const TruncatedSeries& other) const
{
    const unsigned n = std::min(order(), other.order());
    for (unsigned i = 0; i <= n; ++i) {
        if (coeffs_[i] != other.coeffs_[i]) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g)
{
    const unsigned n = std::min(f.order(), g.order());
    std::vector<Rational> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        c[i] = f[i] + g[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g)
{
    const unsigned n = std::min(f.order(), g.order());
    std::vector<mpq_class> acc(n + 1, mpq_class(0));
    for (unsigned i = 0; i <= n; ++i) {
        if (f[i].is_zero()) {
            continue;
        }
        for (unsigned k = 0; i + k <= n; ++k) {
            acc[i + k] += f[i].raw() * g[k].raw();
        }
    }
    std::vector<Rational> c;
    c.reserve(n + 1);
    for (auto& v : acc) {
        c.emplace_back(std::move(v));
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& f)
{
    std::vector<Rational> out(f.coefficients().begin(), f.coefficients().end());
    for (auto& v : out) {
        v *= c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries binomial_series(const Rational& alpha, unsigned order)
{
    std::vector<Rational> c(order + 1);
    c[0] = Rational(1);
    // c_{n+1} = c_n (alpha + n) / (n + 1)
    for (unsigned n = 0; n < order; ++n) {
        c[n + 1] = c[n] * (alpha + Rational(n)) / Rational(n + 1);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g)
{
    if (!g[0].is_zero()) {
        throw NonzeroConstantTerm("compose: inner series has constant term " + g[0].to_string());
    }
    const unsigned n = std::min(f.order(), g.order());
    const TruncatedSeries inner = g.truncate(n);
    TruncatedSeries acc = TruncatedSeries::constant(f[n], n);
    for (unsigned k = n; k-- > 0;) {
        acc = add(mul(acc, inner), TruncatedSeries::constant(f[k], n));
    }
    return acc;
}

TruncatedSeries mobius_arg(unsigned order)
{
    std::vector<Rational> c(order + 1, Rational(-2));
    c[0] = Rational(0);
    return TruncatedSeries(std::move(c));
}

}  // namespace hyperverify
