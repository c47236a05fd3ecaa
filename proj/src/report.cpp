#include "hyperverify/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hyperverify/errors.hpp"

namespace hyperverify {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const std::set<std::string, std::less<>> kConfigFields = {
    "checks", "jSet", "aSet", "bSet", "dSet", "eSet", "seriesOrder", "theoremArgument",
};

[[noreturn]] void config_error(const std::string& msg)
{
    throw ConfigParseError("config: " + msg);
}

const json& array_field(const json& root, const char* name)
{
    static const json kEmpty = json::array();
    auto it = root.find(name);
    if (it == root.end()) {
        return kEmpty;
    }
    if (!it->is_array()) {
        config_error(std::string("\"") + name + "\" must be an array");
    }
    return *it;
}

std::vector<Rational> rational_set(const json& root, const char* name)
{
    std::vector<Rational> out;
    for (const auto& v : array_field(root, name)) {
        if (!v.is_string()) {
            config_error(std::string("\"") + name + "\" entries must be \"p/q\" strings");
        }
        try {
            out.push_back(Rational::parse(v.get<std::string>()));
        } catch (const std::invalid_argument& ex) {
            config_error(std::string("\"") + name + "\": " + ex.what());
        }
    }
    return out;
}

ordered_json rational_list(const std::vector<Rational>& xs)
{
    ordered_json arr = ordered_json::array();
    for (const auto& x : xs) {
        arr.push_back(x.to_string());
    }
    return arr;
}

ordered_json optional_rational(const std::optional<Rational>& x)
{
    return x ? ordered_json(x->to_string()) : ordered_json(nullptr);
}

ordered_json config_json(const SweepConfig& c)
{
    ordered_json out;
    ordered_json checks = ordered_json::array();
    for (Check ch : c.checks) {
        checks.push_back(std::string(to_string(ch)));
    }
    out["checks"] = checks;
    out["jSet"] = c.sets.j;
    out["aSet"] = rational_list(c.sets.a);
    out["bSet"] = rational_list(c.sets.b);
    out["dSet"] = rational_list(c.sets.d);
    out["eSet"] = rational_list(c.sets.e);
    out["seriesOrder"] = c.series_order;
    out["theoremArgument"] = std::string(to_string(c.theorem_argument));
    return out;
}

ordered_json record_json(const VerificationRecord& r)
{
    ordered_json out;
    out["check"] = std::string(to_string(r.check));
    out["j"] = r.key.j ? ordered_json(*r.key.j) : ordered_json(nullptr);
    out["a"] = r.key.a.to_string();
    out["b"] = r.key.b.to_string();
    out["d"] = optional_rational(r.key.d);
    out["e"] = optional_rational(r.key.e);
    out["lhs"] = optional_rational(r.lhs);
    out["rhs"] = optional_rational(r.rhs);
    out["term"] = r.term ? ordered_json(*r.term) : ordered_json(nullptr);
    out["equal"] = r.equal;
    out["status"] = std::string(to_string(r.status()));
    if (r.error) {
        out["error"] = r.error->tag;
        out["detail"] = r.error->detail;
    } else {
        out["error"] = nullptr;
        out["detail"] = nullptr;
    }
    return out;
}

template <typename T>
int compare_optional(const std::optional<T>& x, const std::optional<T>& y)
{
    if (!x || !y) {
        return static_cast<int>(x.has_value()) - static_cast<int>(y.has_value());
    }
    return *x < *y ? -1 : (*y < *x ? 1 : 0);
}

}  // namespace

SweepConfig parse_config(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        config_error(std::string("malformed JSON: ") + ex.what());
    }
    if (!root.is_object()) {
        config_error("top level must be an object");
    }
    for (const auto& [key, value] : root.items()) {
        if (!kConfigFields.contains(key)) {
            config_error("unknown field \"" + key + "\"");
        }
    }

    SweepConfig cfg;
    if (!root.contains("checks")) {
        config_error("missing \"checks\"");
    }
    for (const auto& v : array_field(root, "checks")) {
        const auto check = v.is_string() ? parse_check(v.get<std::string>()) : std::nullopt;
        if (!check) {
            config_error("unknown check " + v.dump()
                         + " (expected theorem, corollaries, transform, kummer, pipeline)");
        }
        cfg.checks.push_back(*check);
    }
    for (const auto& v : array_field(root, "jSet")) {
        if (!v.is_number_integer()) {
            config_error("\"jSet\" entries must be integers, got " + v.dump());
        }
        const auto j = v.get<std::int64_t>();
        if (j < kMinJ || j > kMaxJ) {
            config_error("j = " + std::to_string(j) + " is outside [-5, 5]");
        }
        cfg.sets.j.push_back(static_cast<int>(j));
    }
    cfg.sets.a = rational_set(root, "aSet");
    cfg.sets.b = rational_set(root, "bSet");
    cfg.sets.d = rational_set(root, "dSet");
    cfg.sets.e = rational_set(root, "eSet");
    if (auto it = root.find("seriesOrder"); it != root.end()) {
        if (!it->is_number_integer() || it->get<std::int64_t>() < 1
            || it->get<std::int64_t>() > static_cast<std::int64_t>(kMaxSeriesOrder)) {
            config_error("\"seriesOrder\" must be an integer in [1, 256]");
        }
        cfg.series_order = it->get<unsigned>();
    }
    if (auto it = root.find("theoremArgument"); it != root.end()) {
        const auto arg = it->is_string() ? parse_theorem_argument(it->get<std::string>()) : std::nullopt;
        if (!arg) {
            config_error("\"theoremArgument\" must be \"two\" or \"one\"");
        }
        cfg.theorem_argument = *arg;
    }
    return cfg;
}

SweepConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigParseError("config: cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

Summary summarize(const std::vector<VerificationRecord>& records)
{
    Summary s;
    for (const auto& r : records) {
        switch (r.status()) {
        case Status::passed:
            ++s.passed;
            break;
        case Status::failed:
            ++s.failed;
            break;
        case Status::errored:
            ++s.errored;
            break;
        case Status::skipped:
            ++s.skipped;
            break;
        }
    }
    return s;
}

void sort_records(std::vector<VerificationRecord>& records)
{
    auto cmp = [](const VerificationRecord& x, const VerificationRecord& y) {
        if (int c = to_string(x.check).compare(to_string(y.check)); c != 0) {
            return c < 0;
        }
        if (int c = compare_optional(x.key.j, y.key.j); c != 0) {
            return c < 0;
        }
        if (x.key.a != y.key.a) {
            return x.key.a < y.key.a;
        }
        if (x.key.b != y.key.b) {
            return x.key.b < y.key.b;
        }
        if (int c = compare_optional(x.key.d, y.key.d); c != 0) {
            return c < 0;
        }
        return compare_optional(x.key.e, y.key.e) < 0;
    };
    std::stable_sort(records.begin(), records.end(), cmp);
}

Report run_config(const SweepConfig& config, const RunOptions& options)
{
    SweepOptions sweep;
    sweep.jobs = options.jobs;
    sweep.verify.argument = config.theorem_argument;
    sweep.verify.series_order = config.series_order;
    sweep.verify.table = options.table;

    Report report;
    report.config = config;
    report.table = options.table.edition();
    report.records = grid_sweep(config.sets, config.checks, sweep);
    sort_records(report.records);
    report.summary = summarize(report.records);
    return report;
}

std::string to_json(const Report& report)
{
    ordered_json out;
    out["config"] = config_json(report.config);
    out["tableEdition"] = std::string(to_string(report.table));
    ordered_json records = ordered_json::array();
    for (const auto& r : report.records) {
        records.push_back(record_json(r));
    }
    out["records"] = std::move(records);
    out["summary"] = ordered_json{
        {"passed", report.summary.passed},   {"failed", report.summary.failed},
        {"errored", report.summary.errored}, {"skipped", report.summary.skipped},
        {"total", report.summary.total()},
    };
    return out.dump(2) + "\n";
}

int exit_code(const Summary& summary)
{
    return summary.failed == 0 && summary.errored == 0 ? 0 : 1;
}

std::vector<NamedSuite> canonical_suites()
{
    auto r = [](std::int64_t p, std::int64_t q = 1) { return Rational(p, q); };
    std::vector<int> all_j;
    for (int j = kMinJ; j <= kMaxJ; ++j) {
        all_j.push_back(j);
    }
    std::vector<NamedSuite> suites;

    SweepConfig kummer;
    kummer.checks = {Check::kummer};
    kummer.sets.a = {r(-3), r(-1), r(1, 4), r(1, 3), r(2, 5)};
    kummer.sets.b = {r(1, 3), r(2, 5), r(5, 4), r(3)};
    suites.push_back({"kummer", kummer});

    SweepConfig transform;
    transform.checks = {Check::transform};
    transform.sets.j = all_j;
    transform.sets.a = {r(-2), r(1, 4)};
    transform.sets.b = {r(1, 3), r(2, 7)};
    suites.push_back({"transform", transform});

    SweepConfig a_branch;
    a_branch.checks = {Check::theorem, Check::corollaries};
    a_branch.sets = {all_j, {r(-1), r(-2), r(-3), r(-4)}, {r(1, 3), r(2, 5)}, {r(1, 2), r(1), r(5, 2)},
                     {r(4), r(13, 3)}};
    suites.push_back({"theorem-a-branch", a_branch});

    SweepConfig d_branch;
    d_branch.checks = {Check::theorem, Check::corollaries};
    d_branch.sets = {all_j, {r(1, 3), r(3, 4)}, {r(1, 3), r(2, 5)}, {r(-1), r(-2), r(-3), r(-4)},
                     {r(4), r(13, 3)}};
    suites.push_back({"theorem-d-branch", d_branch});

    SweepConfig pipeline;
    pipeline.checks = {Check::pipeline};
    pipeline.sets = {all_j, {r(-1), r(-2), r(-3)}, {r(1, 3), r(2, 5)}, {r(1, 2), r(1)}, {r(3), r(7, 2)}};
    suites.push_back({"pipeline", pipeline});

    SweepConfig canonical;
    canonical.checks = {Check::theorem, Check::corollaries, Check::transform, Check::kummer, Check::pipeline};
    canonical.sets = {{0}, {r(-1)}, {r(1)}, {r(1)}, {r(3)}};
    suites.push_back({"canonical-19/18", canonical});

    return suites;
}

int run_selftest(const RunOptions& options, std::ostream& out)
{
    Summary total;
    out << "selftest (table: " << to_string(options.table.edition()) << ")\n";
    for (const auto& suite : canonical_suites()) {
        const Report rep = run_config(suite.config, options);
        const Summary& s = rep.summary;
        out << "  " << suite.name << ": passed=" << s.passed << " failed=" << s.failed
            << " errored=" << s.errored << " skipped=" << s.skipped << "\n";
        for (const auto& r : rep.records) {
            const Status st = r.status();
            if (st == Status::failed || st == Status::errored) {
                out << "    " << to_string(st) << " " << to_string(r.check);
                if (r.key.j) {
                    out << " j=" << *r.key.j;
                }
                out << " a=" << r.key.a << " b=" << r.key.b;
                if (r.key.d) {
                    out << " d=" << *r.key.d << " e=" << *r.key.e;
                }
                if (r.error) {
                    out << " [" << r.error->tag << ": " << r.error->detail << "]";
                } else {
                    out << " lhs=" << *r.lhs << " rhs=" << *r.rhs;
                }
                out << "\n";
            }
        }
        total.passed += s.passed;
        total.failed += s.failed;
        total.errored += s.errored;
        total.skipped += s.skipped;
    }
    out << "total: passed=" << total.passed << " failed=" << total.failed << " errored=" << total.errored
        << " skipped=" << total.skipped << "\n";
    return exit_code(total);
}

}  // namespace hyperverify
