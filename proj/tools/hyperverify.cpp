// hyperverify: batch verification driver for the beta-integral identity family.
//
//   hyperverify run --config <path> [--out <path>] [--jobs N] [--table printed|corrected]
//   hyperverify selftest [--jobs N] [--table printed|corrected]
//   hyperverify table --j J --b p/q --n N [--table printed|corrected]
//
// Exit codes: 0 all identities hold, 1 an identity failed, 2 usage/config/IO error.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperverify/errors.hpp"
#include "hyperverify/report.hpp"

namespace {

constexpr int kExitUsage = 2;

unsigned default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

hyperverify::CoefficientTable make_table(const std::string& edition)
{
    // CLI11 validates the choice before we get here.
    return hyperverify::CoefficientTable(*hyperverify::parse_table_edition(edition));
}

int cmd_run(const std::string& config_path, const std::string& out_path, unsigned jobs, const std::string& edition)
{
    using namespace hyperverify;
    const SweepConfig cfg = load_config(config_path);
    const Report report = run_config(cfg, RunOptions{jobs, make_table(edition)});
    const std::string body = to_json(report);
    if (out_path.empty()) {
        std::cout << body;
        std::cout.flush();
        if (!std::cout) {
            throw ReportWriteError("cannot write report to standard output");
        }
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << body;
        out.close();
        if (!out) {
            throw ReportWriteError("cannot write report to " + out_path);
        }
    }
    return exit_code(report.summary);
}

int cmd_table(int j, const std::string& b_text, long n, const std::string& edition)
{
    using namespace hyperverify;
    Rational b;
    try {
        b = Rational::parse(b_text);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: --b: " << ex.what() << "\n";
        return kExitUsage;
    }
    const CoefficientTable table = make_table(edition);
    nlohmann::ordered_json out;
    out["j"] = j;
    out["b"] = b.to_string();
    out["n"] = n;
    out["table"] = std::string(to_string(table.edition()));
    out["A"] = table.A(j, b, n).to_string();
    out["B"] = table.B(j, b, n).to_string();
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of hypergeometric identities derived by the beta integral method"};
    app.name("hyperverify");
    app.require_subcommand(1);

    std::string edition = "printed";
    const auto editions = CLI::IsMember({"printed", "corrected"});

    auto* run = app.add_subcommand("run", "Verify a parameter grid described by a JSON config");
    std::string config_path;
    std::string out_path;
    unsigned jobs = default_jobs();
    run->add_option("--config", config_path, "Config file (JSON)")->required();
    run->add_option("--out", out_path, "Write the report here instead of standard output");
    run->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    run->add_option("--table", edition, "Coefficient table edition")->check(editions);

    auto* selftest = app.add_subcommand("selftest", "Run the built-in canonical grids");
    selftest->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    selftest->add_option("--table", edition, "Coefficient table edition")->check(editions);

    auto* table = app.add_subcommand("table", "Print A_j(b, n) and B_j(b, n)");
    int j = 0;
    std::string b_text;
    long n = 0;
    table->add_option("--j", j, "Row index")->required()->check(CLI::Range(hyperverify::kMinJ, hyperverify::kMaxJ));
    table->add_option("--b", b_text, "Parameter b as p/q")->required();
    table->add_option("--n", n, "Summation index")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--table", edition, "Coefficient table edition")->check(editions);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*run) {
            return cmd_run(config_path, out_path, jobs, edition);
        }
        if (*selftest) {
            return hyperverify::run_selftest(hyperverify::RunOptions{jobs, make_table(edition)}, std::cout);
        }
        return cmd_table(j, b_text, n, edition);
    } catch (const hyperverify::Error& ex) {
        std::cerr << "error: " << ex.tag() << ": " << ex.what() << "\n";
        return kExitUsage;
    }
}
