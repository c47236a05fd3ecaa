#pragma once

#include <vector>

#include "hyperverify/identities.hpp"

namespace hyperverify {

struct GridSets {
    std::vector<int> j;
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::vector<Rational> d;
    std::vector<Rational> e;
};

struct SweepOptions {
    VerifyOptions verify;
    /// Worker threads; 0 or 1 runs inline.
    unsigned jobs = 1;
};

/// Runs every selected check over the Cartesian product of the sets.
///
/// Records come back grouped by check in the order given, and within a check
/// in lexicographic order of the set positions (j, a, b, d, e), independent
/// of `jobs`. Kummer uses (a, b), transform uses (j, a, b); corollaries are
/// only produced for |j| <= 3. Per-case failures are embedded in the records.
[[nodiscard]] std::vector<VerificationRecord> grid_sweep(const GridSets& sets, const std::vector<Check>& checks,
                                                         const SweepOptions& options = {});

}  // namespace hyperverify
