#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hyperverify/coefficients.hpp"
#include "hyperverify/gamma_product.hpp"
#include "hyperverify/hyper.hpp"
#include "hyperverify/rational.hpp"
#include "hyperverify/series.hpp"

namespace hyperverify {

/// One instance (j, a, b, d, e) of the beta-integral identity family.
struct IdentityCase {
    int j = 0;
    Rational a;
    Rational b;
    Rational d;
    Rational e;
};

/// Which parameter makes the sums finite.
enum class Branch { a, d };

/// a-branch when a is a nonpositive integer, else d-branch when d is; empty
/// when neither terminates.
[[nodiscard]] std::optional<Branch> branch_of(const IdentityCase& c);

/// Argument of the 3F2 on the theorem's left side. `two` is the value the
/// derivation produces; `one` is kept as a negative control.
enum class TheoremArgument { two, one };

[[nodiscard]] std::string_view to_string(TheoremArgument arg) noexcept;
[[nodiscard]] std::optional<TheoremArgument> parse_theorem_argument(std::string_view text) noexcept;

// ---------------------------------------------------------------------------
// Coefficient prefactors

/// Gamma(b)Gamma(1-b) / (Gamma(b + j/2 + |j|/2) Gamma(1 - b - [(j+1)/2])).
[[nodiscard]] GammaProduct even_part_gamma(int j, const Rational& b);
/// Gamma(-b)Gamma(1+b) / (Gamma(b + j/2 + |j|/2) Gamma(-b - [j/2])).
[[nodiscard]] GammaProduct odd_part_gamma(int j, const Rational& b);

/// Reduced even-part prefactor. Throws PoleError on b in the pole set of j.
[[nodiscard]] Rational even_part_prefactor(int j, const Rational& b);
/// Reduced odd-part prefactor, including the factor 2a/(2b+j).
[[nodiscard]] Rational odd_part_prefactor(int j, const Rational& a, const Rational& b);

// ---------------------------------------------------------------------------
// Series-level transformations

/// (1-x)^{-2a} 2F1(2a, b; 2b; -2x/(1-x)) through x^order.
[[nodiscard]] TruncatedSeries kummer_lhs_series(const Rational& a, const Rational& b, unsigned order);
/// 2F1(a, a+1/2; b+1/2; x^2) through x^order.
[[nodiscard]] TruncatedSeries kummer_rhs_series(const Rational& a, const Rational& b, unsigned order);

/// (1-x)^{-2a} 2F1(2a, b; 2b+j; -2x/(1-x)) through x^order.
[[nodiscard]] TruncatedSeries gen_transform_lhs_series(int j, const Rational& a, const Rational& b,
                                                       unsigned order);

/// Selects the parts of the generalized right side; used to check that even
/// coefficients come only from the A-part and odd ones only from the B-part.
enum class RhsParts { both, even_only, odd_only };

/// C_A sum A_j (...) x^{2n} + C_B sum B_j (...) x^{2n+1} through x^order.
[[nodiscard]] TruncatedSeries gen_transform_rhs_series(int j, const Rational& a, const Rational& b,
                                                       unsigned order,
                                                       const CoefficientTable& table = {},
                                                       RhsParts parts = RhsParts::both);

// ---------------------------------------------------------------------------
// Main theorem and corollaries

/// Gamma(e)Gamma(e-2a-d)/(Gamma(e-2a)Gamma(e-d)).
[[nodiscard]] GammaProduct theorem_lhs_gamma(const IdentityCase& c);

/// Prefactor times 3F2(2a, b, d; 2b+j, 1+2a+d-e; z), z = 2 or 1.
[[nodiscard]] Rational theorem_lhs(const IdentityCase& c, TheoremArgument arg = TheoremArgument::two);

/// The A_j/B_j-weighted 4F3-type sums at unit argument with their prefactors.
[[nodiscard]] Rational theorem_rhs(const IdentityCase& c, const CoefficientTable& table = {});

/// The explicit 4F3/5F4 closed forms for |j| <= 3. Throws UnsupportedJ for
/// |j| > 3: no closed form is tabulated there.
[[nodiscard]] Rational corollary_rhs(const IdentityCase& c);

// ---------------------------------------------------------------------------
// Beta-integral derivation, replayed exactly

struct PipelineResult {
    /// Left side of the generalized transformation at a = -m: a polynomial of degree 2m.
    TruncatedSeries lhs_polynomial{0};
    /// Normalized beta transform x^p -> (d)_p/(e)_p of lhs_polynomial.
    Rational lhs_transform;
    /// The summed closed form: prefactor times 3F2(...; 2).
    Rational lhs_closed_form;
    /// Right side of the transformation at the same parameters.
    TruncatedSeries rhs_polynomial{0};
    Rational rhs_transform;
    /// theorem_rhs for the same case.
    Rational rhs_closed_form;

    [[nodiscard]] bool lhs_equal() const { return lhs_transform == lhs_closed_form; }
    [[nodiscard]] bool rhs_equal() const { return rhs_transform == rhs_closed_form; }
};

/// (d)_p / (e)_p, routed through pochhammer_duplication for the even and odd halves.
[[nodiscard]] Rational normalized_beta_moment(const Rational& d, const Rational& e, unsigned p);

/// Normalized beta transform of a polynomial.
[[nodiscard]] Rational normalized_beta_transform(const TruncatedSeries& polynomial, const Rational& d,
                                                 const Rational& e);

/// Requires a a nonpositive integer and 0 < d < e; throws PreconditionViolation otherwise.
[[nodiscard]] PipelineResult beta_integral_pipeline(const IdentityCase& c, const CoefficientTable& table = {});

// ---------------------------------------------------------------------------
// Verification records

enum class Check { kummer, transform, theorem, corollaries, pipeline };

[[nodiscard]] std::string_view to_string(Check check) noexcept;
[[nodiscard]] std::optional<Check> parse_check(std::string_view text) noexcept;

enum class Status { passed, failed, errored, skipped };

[[nodiscard]] std::string_view to_string(Status status) noexcept;

/// Parameters a record refers to; series checks leave d, e (and j for Kummer) empty.
struct CaseKey {
    std::optional<int> j;
    Rational a;
    Rational b;
    std::optional<Rational> d;
    std::optional<Rational> e;
};

struct ErrorInfo {
    std::string tag;
    std::string detail;
};

struct VerificationRecord {
    Check check = Check::theorem;
    CaseKey key;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    /// For series checks: the coefficient index lhs/rhs refer to (first
    /// mismatch, or the truncation order when all agree).
    std::optional<unsigned> term;
    bool equal = false;
    std::optional<ErrorInfo> error;

    [[nodiscard]] Status status() const;
};

struct VerifyOptions {
    TheoremArgument argument = TheoremArgument::two;
    CoefficientTable table;
    unsigned series_order = 24;
};

[[nodiscard]] VerificationRecord verify_kummer(const Rational& a, const Rational& b, const VerifyOptions& opts = {});
[[nodiscard]] VerificationRecord verify_transform(int j, const Rational& a, const Rational& b,
                                                  const VerifyOptions& opts = {});
[[nodiscard]] VerificationRecord verify_theorem(const IdentityCase& c, const VerifyOptions& opts = {});
/// Corollary closed form against the theorem's left side.
[[nodiscard]] VerificationRecord verify_corollary(const IdentityCase& c, const VerifyOptions& opts = {});
/// Beta transform of the left-side polynomial against its closed form.
[[nodiscard]] VerificationRecord verify_pipeline(const IdentityCase& c, const VerifyOptions& opts = {});

}  // namespace hyperverify
