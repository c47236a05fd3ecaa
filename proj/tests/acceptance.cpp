// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact
// (tolerance zero); time limits are wall-clock per criterion.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hyperverify/coefficients.hpp"
#include "hyperverify/errors.hpp"
#include "hyperverify/gamma_product.hpp"
#include "hyperverify/identities.hpp"
#include "hyperverify/pochhammer.hpp"
#include "hyperverify/report.hpp"
#include "hyperverify/series.hpp"
#include "hyperverify/sweep.hpp"
#include "test_support.hpp"

using namespace hyperverify;
using hyperverify::testing::naive_pochhammer;
using hyperverify::testing::R;
using hyperverify::testing::RationalGen;

namespace {

using Clock = std::chrono::steady_clock;

constexpr unsigned kOrder = 24;
constexpr int kTrials = 1000;

struct Verdict {
    bool ok = true;
    std::string detail;
};

int failures = 0;
std::vector<std::string> pending_info;

void criterion(const std::string& id, const std::string& title, double limit_s, const std::function<Verdict()>& body)
{
    const auto t0 = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& ex) {
        v = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = limit_s <= 0 || secs < limit_s;
    const bool ok = v.ok && in_time;
    failures += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << v.detail;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << " (" << secs << " s";
    if (limit_s > 0) {
        line << ", limit " << limit_s << " s";
    }
    line << ")";
    std::cout << line.str() << "\n";
    for (const auto& note : pending_info) {
        std::cout << "       info: " << note << "\n";
    }
    pending_info.clear();
}

void info(std::string text)
{
    pending_info.push_back(std::move(text));
}

std::string counts(const Summary& s)
{
    std::ostringstream out;
    out << "passed=" << s.passed << " failed=" << s.failed << " errored=" << s.errored << " skipped=" << s.skipped;
    return out.str();
}

std::string failing_js(const std::vector<VerificationRecord>& records)
{
    std::vector<int> js;
    for (const auto& r : records) {
        if ((r.status() == Status::failed || r.status() == Status::errored) && r.key.j) {
            js.push_back(*r.key.j);
        }
    }
    std::ranges::sort(js);
    const auto [first, last] = std::ranges::unique(js);
    js.erase(first, last);
    std::string out;
    for (int j : js) {
        out += (out.empty() ? "" : ",") + std::to_string(j);
    }
    return out.empty() ? "none" : out;
}

std::vector<int> all_j()
{
    std::vector<int> js(kMaxJ - kMinJ + 1);
    std::iota(js.begin(), js.end(), kMinJ);
    return js;
}

GridSets a_branch_grid()
{
    return {all_j(), {R(-1), R(-2), R(-3), R(-4)}, {R(1, 3), R(2, 5)}, {R(1, 2), R(1), R(5, 2)}, {R(4), R(13, 3)}};
}

GridSets d_branch_grid()
{
    return {all_j(), {R(1, 3), R(3, 4)}, {R(1, 3), R(2, 5)}, {R(-1), R(-2), R(-3), R(-4)}, {R(4), R(13, 3)}};
}

// Strict gate for identity grids: nothing failed or errored and something ran.
Verdict grid_verdict(const std::vector<VerificationRecord>& records, std::size_t min_valid = 1)
{
    const Summary s = summarize(records);
    const bool ok = s.failed == 0 && s.errored == 0 && s.passed >= min_valid;
    return {ok, counts(s) + (ok ? "" : "; failing j: " + failing_js(records))};
}

template <typename F>
void for_each_case(const GridSets& g, F&& f)
{
    for (int j : g.j)
        for (const auto& a : g.a)
            for (const auto& b : g.b)
                for (const auto& d : g.d)
                    for (const auto& e : g.e) f(IdentityCase{j, a, b, d, e});
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(HYPERVERIFY_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int quiet_selftest(const CoefficientTable& table)
{
    std::ostringstream sink;
    return run_selftest(RunOptions{1, table}, sink);
}

TruncatedSeries random_series(RationalGen& gen, unsigned order)
{
    std::vector<Rational> c(order + 1);
    for (auto& x : c) {
        x = gen();
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace

int main()
{
    std::cout << "acceptance (exact rational equality, tolerance 0)\n";

    criterion("C1", "Kummer quadratic transformation, order 24, 20 cases", 1.0, [] {
        const GridSets g{{}, {R(-3), R(-1), R(1, 4), R(1, 3), R(2, 5)}, {R(1, 3), R(2, 5), R(5, 4), R(3)}, {}, {}};
        const auto records = grid_sweep(g, {Check::kummer}, {VerifyOptions{.series_order = kOrder}});
        return grid_verdict(records, 20);
    });

    criterion("C2", "generalized transformation, j in [-5,5], order 24", 5.0, [] {
        const GridSets g{all_j(), {R(-2), R(1, 4)}, {R(1, 3), R(2, 7)}, {}, {}};
        const auto records = grid_sweep(g, {Check::transform}, {VerifyOptions{.series_order = kOrder}});
        const Verdict v = grid_verdict(records);
        const VerifyOptions corrected{.table = CoefficientTable(TableEdition::corrected), .series_order = kOrder};
        info("same grid with the corrected B_-5 row: " + counts(summarize(grid_sweep(g, {Check::transform}, {corrected}))));
        return v;
    });

    criterion("C3", "theorem at argument 2, a-branch grid", 10.0, [] {
        const auto records = grid_sweep(a_branch_grid(), {Check::theorem});
        const Verdict v = grid_verdict(records, 400);
        const VerifyOptions corrected{.table = CoefficientTable(TableEdition::corrected)};
        info("corrected B_-5 row: " + counts(summarize(grid_sweep(a_branch_grid(), {Check::theorem}, {corrected}))));
        return v;
    });

    criterion("C4", "theorem at argument 2, d-branch grid", 10.0, [] {
        const auto records = grid_sweep(d_branch_grid(), {Check::theorem});
        const Verdict v = grid_verdict(records, 200);
        const VerifyOptions corrected{.table = CoefficientTable(TableEdition::corrected)};
        info("corrected B_-5 row: " + counts(summarize(grid_sweep(d_branch_grid(), {Check::theorem}, {corrected}))));
        return v;
    });

    criterion("C5", "j=0 reduces to the 4F3 closed form; canonical case is 19/18", 0, [] {
        GridSets g = a_branch_grid();
        g.j = {0};
        std::size_t compared = 0;
        std::size_t bad = 0;
        for_each_case(g, [&](const IdentityCase& c) {
            const Rational lhs = theorem_lhs(c);
            const Rational rhs = theorem_rhs(c);
            const Rational closed = corollary_rhs(c);
            ++compared;
            bad += (lhs == rhs && rhs == closed) ? 0 : 1;
        });
        const IdentityCase canon{0, R(-1), R(1), R(1), R(3)};
        const bool canon_ok = theorem_lhs(canon) == R(19, 18) && theorem_rhs(canon) == R(19, 18)
            && corollary_rhs(canon) == R(19, 18);
        return Verdict{bad == 0 && compared == 48 && canon_ok,
                       std::to_string(compared - bad) + "/" + std::to_string(compared) + " agree; canonical "
                           + (canon_ok ? "19/18 on both sides" : "mismatch")};
    });

    criterion("C6", "corollary closed forms equal the theorem right side, |j| <= 3", 0, [] {
        GridSets g = a_branch_grid();
        g.j = {-3, -2, -1, 0, 1, 2, 3};
        std::size_t compared = 0;
        std::size_t bad = 0;
        std::size_t skipped = 0;
        for_each_case(g, [&](const IdentityCase& c) {
            try {
                const bool eq = corollary_rhs(c) == theorem_rhs(c);
                ++compared;
                bad += eq ? 0 : 1;
            } catch (const PoleError&) {
                ++skipped;
            }
        });
        return Verdict{bad == 0 && compared > 0, std::to_string(compared - bad) + "/" + std::to_string(compared)
                                                     + " agree, " + std::to_string(skipped) + " pole-skipped"};
    });

    criterion("C7", "beta-integral pipeline reproduces both sides", 0, [] {
        const GridSets g{all_j(), {R(-1), R(-2), R(-3)}, {R(1, 3), R(2, 5)}, {R(1, 2), R(1)}, {R(3), R(7, 2)}};
        std::size_t total = 0;
        std::size_t bad = 0;
        std::size_t skipped = 0;
        for_each_case(g, [&](const IdentityCase& c) {
            try {
                const PipelineResult p = beta_integral_pipeline(c);
                ++total;
                bad += (p.lhs_equal() && p.rhs_equal()) ? 0 : 1;
            } catch (const PoleError&) {
                ++skipped;
            } catch (const DenominatorPoleBeforeTermination&) {
                ++skipped;
            }
        });
        const PipelineResult canon = beta_integral_pipeline({0, R(-1), R(1), R(1), R(3)});
        const bool chain = canon.lhs_transform == R(19, 18) && canon.lhs_closed_form == R(19, 18)
            && canon.rhs_transform == R(19, 18) && canon.rhs_closed_form == R(19, 18);
        return Verdict{bad == 0 && total > 0 && chain,
                       std::to_string(total - bad) + "/" + std::to_string(total) + " pairs equal, "
                           + std::to_string(skipped) + " pole-skipped; 19/18 chain "
                           + (chain ? "reproduced" : "broken")};
    });

    criterion("C8", "negative control: argument 1 fails on the a-branch grid", 0, [] {
        const VerifyOptions one{.argument = TheoremArgument::one};
        const Summary s = summarize(grid_sweep(a_branch_grid(), {Check::theorem}, {one}));
        return Verdict{s.failed > 0, counts(s)};
    });

    criterion("C9", "property suites, 1000 trials each", 5.0, [] {
        RationalGen gen(20261019, 30, 8);
        int bad = 0;
        for (int t = 0; t < kTrials; ++t) {
            const Rational a = gen();
            const auto m = static_cast<unsigned>(gen.uniform_int(0, 12));
            const auto n = static_cast<unsigned>(gen.uniform_int(0, 12));
            bad += pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n) ? 0 : 1;
            bad += pochhammer(a, m + n) == Rational(naive_pochhammer(a.raw(), m + n)) ? 0 : 1;
        }
        const int splitting = bad;
        for (int t = 0; t < kTrials; ++t) {
            const Rational d = gen();
            const auto n = static_cast<unsigned>(gen.uniform_int(0, 12));
            const Rational direct(naive_pochhammer(d.raw(), 2 * n));
            const Rational split = pow(Rational(4), n) * pochhammer(d / 2, n) * pochhammer((d + 1) / 2, n);
            bad += pochhammer_duplication(d, n) == direct && split == direct ? 0 : 1;
        }
        const int duplication = bad - splitting;
        for (int t = 0; t < kTrials; ++t) {
            const auto order = static_cast<unsigned>(gen.uniform_int(0, 8));
            const auto f = random_series(gen, order);
            const auto g = random_series(gen, order);
            const auto h = random_series(gen, order);
            const bool ring = add(f, g) == add(g, f) && mul(f, g) == mul(g, f)
                && mul(mul(f, g), h) == mul(f, mul(g, h)) && mul(f, add(g, h)) == add(mul(f, g), mul(f, h))
                && mul(f, TruncatedSeries::constant(Rational(1), order)) == f
                && add(f, scale(Rational(-1), f)) == TruncatedSeries(order);
            bad += ring ? 0 : 1;
        }
        const int ring = bad - splitting - duplication;
        for (int t = 0; t < kTrials; ++t) {
            // Balanced pairs per residue class keep the product rational.
            std::vector<std::pair<Rational, int>> entries;
            const int pairs = gen.uniform_int(1, 4);
            for (int k = 0; k < pairs; ++k) {
                const Rational base = gen.non_integer();
                entries.emplace_back(base + gen.uniform_int(-3, 3), 1);
                entries.emplace_back(base + gen.uniform_int(-3, 3), -1);
            }
            auto build = [&] {
                GammaProduct p;
                for (const auto& [arg, exp] : entries) {
                    if (exp > 0) {
                        p.multiply(arg);
                    } else {
                        p.divide(arg);
                    }
                }
                return gamma_simplify(p);
            };
            const Rational reference = build();
            std::ranges::shuffle(entries, gen.engine());
            bad += build() == reference ? 0 : 1;
        }
        const int gamma = bad - splitting - duplication - ring;
        std::ostringstream detail;
        detail << "violations: splitting=" << splitting << " duplication=" << duplication << " ring=" << ring
               << " gamma-permutation=" << gamma;
        return Verdict{bad == 0, detail.str()};
    });

    criterion("C10", "CLI contract", 0, [] {
        const int clean = quiet_selftest(CoefficientTable{});
        const int clean_corrected = quiet_selftest(CoefficientTable(TableEdition::corrected));

        int flipped = 0;
        int flipped_from_corrected = 0;
        int entries = 0;
        for (int j = kMinJ; j <= kMaxJ; ++j) {
            for (CoeffPart part : {CoeffPart::A, CoeffPart::B}) {
                ++entries;
                const TableMutation m{j, part, Rational(1)};
                flipped += quiet_selftest(CoefficientTable(TableEdition::printed, m)) == 1 ? 1 : 0;
                flipped_from_corrected += quiet_selftest(CoefficientTable(TableEdition::corrected, m)) == 1 ? 1 : 0;
            }
        }

        std::ofstream("acceptance_bad.json") << R"({"checks": ["theorem"], "jSet": [0], "aSet": [-1]})";
        const int malformed = run_cli("run --config acceptance_bad.json");

        SweepConfig cfg;
        cfg.checks = {Check::kummer, Check::transform, Check::theorem, Check::corollaries, Check::pipeline};
        cfg.sets = {{-5, -2, 0, 3}, {R(-2), R(1, 4)}, {R(1, 3), R(1)}, {R(1, 2), R(-1)}, {R(4)}};
        const std::string one = to_json(run_config(cfg, {1, {}}));
        const std::string many = to_json(run_config(cfg, {6, {}}));
        const bool deterministic = one == many;

        info("selftest exit, printed table: " + std::to_string(clean) + " (required 0)");
        info("selftest exit, corrected table: " + std::to_string(clean_corrected));
        info("single-entry mutations reaching exit 1: " + std::to_string(flipped) + "/" + std::to_string(entries)
             + " from printed, " + std::to_string(flipped_from_corrected) + "/" + std::to_string(entries)
             + " from corrected");
        info("malformed config exit: " + std::to_string(malformed));
        info(std::string("report bytes identical for jobs 1 and 6: ") + (deterministic ? "yes" : "no"));

        const bool ok = clean == 0 && flipped == entries && flipped_from_corrected == entries && malformed == 2
            && deterministic;
        return Verdict{ok, ok ? "all clauses hold" : "see info lines"};
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
