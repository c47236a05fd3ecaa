#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hyperverify/sweep.hpp"

namespace hyperverify {

/// A batch request, read from JSON. Rationals are "p/q" strings.
struct SweepConfig {
    std::vector<Check> checks;
    GridSets sets;
    unsigned series_order = 24;
    TheoremArgument theorem_argument = TheoremArgument::two;
};

inline constexpr unsigned kMaxSeriesOrder = 256;

/// Throws ConfigParseError on malformed JSON, unknown or mistyped fields,
/// j outside [-5, 5], series orders outside [1, 256], or bad rational strings.
[[nodiscard]] SweepConfig parse_config(std::string_view json_text);
[[nodiscard]] SweepConfig load_config(const std::filesystem::path& path);

struct Summary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errored = 0;
    std::size_t skipped = 0;

    [[nodiscard]] std::size_t total() const { return passed + failed + errored + skipped; }
};

struct Report {
    SweepConfig config;
    TableEdition table = TableEdition::printed;
    /// Sorted by (check name, j, a, b, d, e).
    std::vector<VerificationRecord> records;
    Summary summary;
};

[[nodiscard]] Summary summarize(const std::vector<VerificationRecord>& records);

/// Orders records by check name, then numerically by j, a, b, d, e (absent first).
void sort_records(std::vector<VerificationRecord>& records);

struct RunOptions {
    unsigned jobs = 1;
    CoefficientTable table;
};

[[nodiscard]] Report run_config(const SweepConfig& config, const RunOptions& options = {});

/// Deterministic JSON rendering: same report, same bytes.
[[nodiscard]] std::string to_json(const Report& report);

/// 0 when nothing failed or errored, 1 otherwise.
[[nodiscard]] int exit_code(const Summary& summary);

/// A named grid from the built-in canonical suite.
struct NamedSuite {
    std::string name;
    SweepConfig config;
};

/// The canonical verification grids run by `selftest`.
[[nodiscard]] std::vector<NamedSuite> canonical_suites();

/// Runs canonical_suites() against `options.table`, writes one summary line
/// per suite (and each non-passing record) to `out`, returns the exit code.
int run_selftest(const RunOptions& options, std::ostream& out);

}  // namespace hyperverify
