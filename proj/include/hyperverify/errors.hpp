#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperverify {

/// Base class for every failure the engine reports. `tag()` is the stable
/// identifier written into verification records and reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual std::string_view tag() const noexcept = 0;
};

#define HYPERVERIFY_ERROR(Name)                                                \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
        [[nodiscard]] std::string_view tag() const noexcept override           \
        {                                                                      \
            return #Name;                                                      \
        }                                                                      \
    }

/// A Gamma factor at a nonpositive integer survives simplification, or a
/// coefficient prefactor divides by zero.
HYPERVERIFY_ERROR(PoleError);
/// An unpaired Gamma factor at a non-integer argument: the value is not rational.
HYPERVERIFY_ERROR(TranscendentalResidue);
/// A denominator Pochhammer symbol vanishes at or before the last nonzero term.
HYPERVERIFY_ERROR(DenominatorPoleBeforeTermination);
/// No numerator parameter is a nonpositive integer where a finite sum is needed.
HYPERVERIFY_ERROR(NonTerminating);
HYPERVERIFY_ERROR(UnsupportedJ);
HYPERVERIFY_ERROR(NonzeroConstantTerm);
HYPERVERIFY_ERROR(PreconditionViolation);
HYPERVERIFY_ERROR(ConfigParseError);
HYPERVERIFY_ERROR(ReportWriteError);

#undef HYPERVERIFY_ERROR

}  // namespace hyperverify
