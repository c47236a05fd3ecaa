#include "hyperverify/identities.hpp"

#include <exception>

#include "hyperverify/errors.hpp"
#include "hyperverify/pochhammer.hpp"

namespace hyperverify {

namespace {

const Rational kHalf(1, 2);

Rational half(const Rational& x)
{
    return x * kHalf;
}

// b + j/2 + |j|/2
Rational shifted_b(int j, const Rational& b)
{
    return b + Rational(j + absval(j), 2);
}

Rational checked_div(const Rational& num, const Rational& den, std::string_view what)
{
    if (den.is_zero()) {
        throw PoleError("pole: " + std::string(what) + " vanishes");
    }
    return num / den;
}

WeightedSumSpec even_part_sum(int j, const Rational& a, const Rational& b, const CoefficientTable& table)
{
    const Rational bj = b + Rational(j, 2);
    WeightedSumSpec w;
    w.coefficient = [table, j, b](std::int64_t n) { return table.A(j, b, n); };
    w.numerators = {a, a + kHalf, b + Rational(bracket(Rational(j + 1, 2)))};
    w.denominators = {bj, bj + kHalf};
    return w;
}

WeightedSumSpec odd_part_sum(int j, const Rational& a, const Rational& b, const CoefficientTable& table)
{
    const Rational bj = b + Rational(j, 2);
    WeightedSumSpec w;
    w.coefficient = [table, j, b](std::int64_t n) { return table.B(j, b, n); };
    w.numerators = {a + kHalf, a + 1, b + 1 + Rational(bracket(Rational(j, 2)))};
    w.denominators = {bj + kHalf, bj + 1};
    return w;
}

HyperSpec theorem_series(const IdentityCase& c, const Rational& z)
{
    return HyperSpec{{2 * c.a, c.b, c.d}, {2 * c.b + c.j, 1 + 2 * c.a + c.d - c.e}, z};
}

}  // namespace

std::optional<Branch> branch_of(const IdentityCase& c)
{
    if (c.a.is_nonpositive_integer()) {
        return Branch::a;
    }
    if (c.d.is_nonpositive_integer()) {
        return Branch::d;
    }
    return std::nullopt;
}

std::string_view to_string(TheoremArgument arg) noexcept
{
    return arg == TheoremArgument::two ? "two" : "one";
}

std::optional<TheoremArgument> parse_theorem_argument(std::string_view text) noexcept
{
    if (text == "two") {
        return TheoremArgument::two;
    }
    if (text == "one") {
        return TheoremArgument::one;
    }
    return std::nullopt;
}

GammaProduct even_part_gamma(int j, const Rational& b)
{
    require_supported_j(j);
    return GammaProduct({b, 1 - b}, {shifted_b(j, b), 1 - b - Rational(bracket(Rational(j + 1, 2)))});
}

GammaProduct odd_part_gamma(int j, const Rational& b)
{
    require_supported_j(j);
    return GammaProduct({-b, 1 + b}, {shifted_b(j, b), -b - Rational(bracket(Rational(j, 2)))});
}

Rational even_part_prefactor(int j, const Rational& b)
{
    return gamma_simplify(even_part_gamma(j, b));
}

Rational odd_part_prefactor(int j, const Rational& a, const Rational& b)
{
    const Rational lead = checked_div(2 * a, 2 * b + j, "2b+j = " + (2 * b + j).to_string());
    return lead * gamma_simplify(odd_part_gamma(j, b));
}

TruncatedSeries kummer_lhs_series(const Rational& a, const Rational& b, unsigned order)
{
    return gen_transform_lhs_series(0, a, b, order);
}

TruncatedSeries kummer_rhs_series(const Rational& a, const Rational& b, unsigned order)
{
    WeightedSumSpec w;
    w.coefficient = [](std::int64_t) { return Rational(1); };
    w.numerators = {a, a + kHalf};
    w.denominators = {b + kHalf};
    w.power_step = 2;
    return weighted_series(w, order);
}

TruncatedSeries gen_transform_lhs_series(int j, const Rational& a, const Rational& b, unsigned order)
{
    require_supported_j(j);
    const std::vector<Rational> num{2 * a, b};
    const std::vector<Rational> den{2 * b + j};
    const TruncatedSeries outer = series_in_z(num, den, order);
    return mul(binomial_series(2 * a, order), compose(outer, mobius_arg(order)));
}

TruncatedSeries gen_transform_rhs_series(int j, const Rational& a, const Rational& b, unsigned order,
                                         const CoefficientTable& table, RhsParts parts)
{
    require_supported_j(j);
    TruncatedSeries out(order);
    if (parts != RhsParts::odd_only) {
        WeightedSumSpec w = even_part_sum(j, a, b, table);
        w.power_step = 2;
        out = add(out, scale(even_part_prefactor(j, b), weighted_series(w, order)));
    }
    if (parts != RhsParts::even_only && !table.b_row_vanishes(j) && !a.is_zero()) {
        WeightedSumSpec w = odd_part_sum(j, a, b, table);
        w.power_step = 2;
        w.power_offset = 1;
        out = add(out, scale(odd_part_prefactor(j, a, b), weighted_series(w, order)));
    }
    return out;
}

GammaProduct theorem_lhs_gamma(const IdentityCase& c)
{
    return GammaProduct({c.e, c.e - 2 * c.a - c.d}, {c.e - 2 * c.a, c.e - c.d});
}

Rational theorem_lhs(const IdentityCase& c, TheoremArgument arg)
{
    require_supported_j(c.j);
    if (!branch_of(c)) {
        throw NonTerminating("neither a nor d is a nonpositive integer");
    }
    const Rational z = arg == TheoremArgument::two ? Rational(2) : Rational(1);
    const Rational pre = gamma_simplify(theorem_lhs_gamma(c));
    return pre * eval_terminating(theorem_series(c, z));
}

Rational theorem_rhs(const IdentityCase& c, const CoefficientTable& table)
{
    require_supported_j(c.j);
    if (!branch_of(c)) {
        throw NonTerminating("neither a nor d is a nonpositive integer");
    }
    const int j = c.j;
    const Rational e_half = half(c.e);
    const Rational d_half = half(c.d);

    WeightedSumSpec even = even_part_sum(j, c.a, c.b, table);
    even.numerators.insert(even.numerators.end(), {d_half, d_half + kHalf});
    even.denominators.insert(even.denominators.end(), {e_half, e_half + kHalf});
    Rational result = even_part_prefactor(j, c.b) * eval_weighted_sum(even);

    if (table.b_row_vanishes(j) || c.a.is_zero() || c.d.is_zero()) {
        return result;
    }
    WeightedSumSpec odd = odd_part_sum(j, c.a, c.b, table);
    odd.numerators.insert(odd.numerators.end(), {d_half + kHalf, d_half + 1});
    odd.denominators.insert(odd.denominators.end(), {e_half + kHalf, e_half + 1});
    const Rational d_over_e = checked_div(c.d, c.e, "e");
    result += odd_part_prefactor(j, c.a, c.b) * d_over_e * eval_weighted_sum(odd);
    return result;
}

Rational corollary_rhs(const IdentityCase& c)
{
    if (c.j < -3 || c.j > 3) {
        throw UnsupportedJ("no closed-form corollary for j = " + std::to_string(c.j));
    }
    if (!branch_of(c)) {
        throw NonTerminating("neither a nor d is a nonpositive integer");
    }
    const Rational& a = c.a;
    const Rational& b = c.b;
    const Rational& d = c.d;
    const Rational& e = c.e;
    const Rational h = kHalf;
    const Rational q(1, 4);

    // Leading series: a, a+1/2, [extra], d/2, d/2+1/2 ; [extras], e/2, e/2+1/2
    auto leading = [&](std::vector<Rational> extra_num, std::vector<Rational> extra_den) {
        std::vector<Rational> num{a, a + h};
        num.insert(num.end(), extra_num.begin(), extra_num.end());
        num.insert(num.end(), {d / 2, d / 2 + h});
        extra_den.insert(extra_den.end(), {e / 2, e / 2 + h});
        return eval_terminating(HyperSpec{std::move(num), std::move(extra_den), Rational(1)});
    };
    // Trailing series: a+1/2, a+1, [extra], d/2+1/2, d/2+1 ; [extras], e/2+1/2, e/2+1
    auto trailing = [&](std::vector<Rational> extra_num, std::vector<Rational> extra_den) {
        std::vector<Rational> num{a + h, a + 1};
        num.insert(num.end(), extra_num.begin(), extra_num.end());
        num.insert(num.end(), {d / 2 + h, d / 2 + 1});
        extra_den.insert(extra_den.end(), {e / 2 + h, e / 2 + 1});
        return eval_terminating(HyperSpec{std::move(num), std::move(extra_den), Rational(1)});
    };
    const bool second_vanishes = a.is_zero() || d.is_zero();
    auto second = [&](const Rational& numer, const Rational& factor_den, auto&& series) -> Rational {
        if (second_vanishes) {
            return Rational(0);
        }
        return checked_div(numer * a * d, e * factor_den, "corollary factor denominator") * series();
    };

    switch (c.j) {
    case 0:
        return leading({}, {b + h});
    case 1:
        return leading({}, {b + h})
               + second(2, 2 * b + 1, [&] { return trailing({}, {b + 3 * h}); });
    case -1:
        return leading({}, {b - h})
               - second(2, 2 * b - 1, [&] { return trailing({}, {b + h}); });
    case 2:
        return leading({b / 2 + 3 * h}, {b / 2 + h, b + 3 * h})
               + second(2, b + 1, [&] { return trailing({}, {b + 3 * h}); });
    case -2:
        return leading({b / 2 + h}, {b / 2 - h, b - h})
               - second(2, b - 1, [&] { return trailing({}, {b - h}); });
    case 3:
        return leading({b / 4 + 3 * h}, {b / 4 + h, b + 3 * h})
               + second(6, 2 * b + 3, [&] { return trailing({3 * b / 4 + 5 * h}, {3 * b / 4 + 3 * h, b + 5 * h}); });
    case -3:
        return leading({b / 4 + 3 * q}, {b / 4 - q, b - 3 * h})
               - second(6, 2 * b - 3, [&] { return trailing({3 * b / 4 + q}, {3 * b / 4 - 3 * q, b - h}); });
    default:
        break;
    }
    throw UnsupportedJ("no closed-form corollary for j = " + std::to_string(c.j));
}

Rational normalized_beta_moment(const Rational& d, const Rational& e, unsigned p)
{
    const unsigned k = p / 2;
    if (p % 2 == 0) {
        return pochhammer_duplication(d, k) / pochhammer_duplication(e, k);
    }
    return (d * pochhammer_duplication(d + 1, k)) / (e * pochhammer_duplication(e + 1, k));
}

Rational normalized_beta_transform(const TruncatedSeries& polynomial, const Rational& d, const Rational& e)
{
    Rational sum(0);
    for (unsigned p = 0; p <= polynomial.order(); ++p) {
        if (!polynomial[p].is_zero()) {
            sum += polynomial[p] * normalized_beta_moment(d, e, p);
        }
    }
    return sum;
}

namespace {

// Degree 2m of the left-side polynomial; validates the integral-convergence regime.
unsigned pipeline_degree(const IdentityCase& c)
{
    require_supported_j(c.j);
    if (!c.a.is_nonpositive_integer()) {
        throw PreconditionViolation("pipeline needs a nonpositive integer a, got " + c.a.to_string());
    }
    if (c.d.sign() <= 0 || (c.e - c.d).sign() <= 0) {
        throw PreconditionViolation("pipeline needs 0 < d < e, got d = " + c.d.to_string()
                                    + ", e = " + c.e.to_string());
    }
    return static_cast<unsigned>(-2 * c.a.to_int64());
}

}  // namespace

PipelineResult beta_integral_pipeline(const IdentityCase& c, const CoefficientTable& table)
{
    const unsigned degree = pipeline_degree(c);
    PipelineResult r;
    r.lhs_polynomial = gen_transform_lhs_series(c.j, c.a, c.b, degree);
    r.lhs_transform = normalized_beta_transform(r.lhs_polynomial, c.d, c.e);
    r.lhs_closed_form = theorem_lhs(c, TheoremArgument::two);
    r.rhs_polynomial = gen_transform_rhs_series(c.j, c.a, c.b, degree, table);
    r.rhs_transform = normalized_beta_transform(r.rhs_polynomial, c.d, c.e);
    r.rhs_closed_form = theorem_rhs(c, table);
    return r;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Check check) noexcept
{
    switch (check) {
    case Check::kummer:
        return "kummer";
    case Check::transform:
        return "transform";
    case Check::theorem:
        return "theorem";
    case Check::corollaries:
        return "corollaries";
    case Check::pipeline:
        return "pipeline";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view text) noexcept
{
    for (Check c : {Check::kummer, Check::transform, Check::theorem, Check::corollaries, Check::pipeline}) {
        if (text == to_string(c)) {
            return c;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Status status) noexcept
{
    switch (status) {
    case Status::passed:
        return "passed";
    case Status::failed:
        return "failed";
    case Status::errored:
        return "errored";
    case Status::skipped:
        return "skipped";
    }
    return "?";
}

Status VerificationRecord::status() const
{
    if (error) {
        // Parameter points outside the identity's domain are exclusions, not failures.
        static constexpr std::string_view kValidation[] = {
            "PoleError", "DenominatorPoleBeforeTermination", "NonTerminating",
            "PreconditionViolation", "UnsupportedJ",
        };
        for (auto tag : kValidation) {
            if (error->tag == tag) {
                return Status::skipped;
            }
        }
        return Status::errored;
    }
    return equal ? Status::passed : Status::failed;
}

namespace {

template <typename Body>
VerificationRecord capture(Check check, CaseKey key, Body&& body)
{
    VerificationRecord rec;
    rec.check = check;
    rec.key = std::move(key);
    try {
        body(rec);
        rec.equal = rec.lhs && rec.rhs && *rec.lhs == *rec.rhs;
    } catch (const Error& ex) {
        rec.lhs.reset();
        rec.rhs.reset();
        rec.term.reset();
        rec.equal = false;
        rec.error = ErrorInfo{std::string(ex.tag()), ex.what()};
    } catch (const std::exception& ex) {
        rec.lhs.reset();
        rec.rhs.reset();
        rec.term.reset();
        rec.equal = false;
        rec.error = ErrorInfo{"InternalError", ex.what()};
    }
    return rec;
}

void compare_series(VerificationRecord& rec, const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    const int diff = lhs.first_difference(rhs);
    const unsigned at = diff < 0 ? std::min(lhs.order(), rhs.order()) : static_cast<unsigned>(diff);
    rec.term = at;
    rec.lhs = lhs[at];
    rec.rhs = rhs[at];
}

CaseKey full_key(const IdentityCase& c)
{
    return CaseKey{c.j, c.a, c.b, c.d, c.e};
}

}  // namespace

VerificationRecord verify_kummer(const Rational& a, const Rational& b, const VerifyOptions& opts)
{
    return capture(Check::kummer, CaseKey{std::nullopt, a, b, std::nullopt, std::nullopt},
                   [&](VerificationRecord& rec) {
                       compare_series(rec, kummer_lhs_series(a, b, opts.series_order),
                                      kummer_rhs_series(a, b, opts.series_order));
                   });
}

VerificationRecord verify_transform(int j, const Rational& a, const Rational& b, const VerifyOptions& opts)
{
    return capture(Check::transform, CaseKey{j, a, b, std::nullopt, std::nullopt},
                   [&](VerificationRecord& rec) {
                       compare_series(rec, gen_transform_lhs_series(j, a, b, opts.series_order),
                                      gen_transform_rhs_series(j, a, b, opts.series_order, opts.table));
                   });
}

VerificationRecord verify_theorem(const IdentityCase& c, const VerifyOptions& opts)
{
    return capture(Check::theorem, full_key(c), [&](VerificationRecord& rec) {
        // Right side first: its prefactor poles name the offending Gamma argument.
        rec.rhs = theorem_rhs(c, opts.table);
        rec.lhs = theorem_lhs(c, opts.argument);
    });
}

VerificationRecord verify_corollary(const IdentityCase& c, const VerifyOptions&)
{
    return capture(Check::corollaries, full_key(c), [&](VerificationRecord& rec) {
        rec.lhs = theorem_lhs(c, TheoremArgument::two);
        rec.rhs = corollary_rhs(c);
    });
}

VerificationRecord verify_pipeline(const IdentityCase& c, const VerifyOptions&)
{
    return capture(Check::pipeline, full_key(c), [&](VerificationRecord& rec) {
        const unsigned degree = pipeline_degree(c);
        const TruncatedSeries poly = gen_transform_lhs_series(c.j, c.a, c.b, degree);
        rec.lhs = normalized_beta_transform(poly, c.d, c.e);
        rec.rhs = theorem_lhs(c, TheoremArgument::two);
    });
}

}  // namespace hyperverify
