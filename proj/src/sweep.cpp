#include "hyperverify/sweep.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace hyperverify {

namespace {

using Task = std::function<VerificationRecord()>;

void enumerate(const GridSets& s, Check check, const VerifyOptions& opts, std::vector<Task>& tasks)
{
    switch (check) {
    case Check::kummer:
        for (const auto& a : s.a) {
            for (const auto& b : s.b) {
                tasks.emplace_back([=, &opts] { return verify_kummer(a, b, opts); });
            }
        }
        return;
    case Check::transform:
        for (int j : s.j) {
            for (const auto& a : s.a) {
                for (const auto& b : s.b) {
                    tasks.emplace_back([=, &opts] { return verify_transform(j, a, b, opts); });
                }
            }
        }
        return;
    case Check::theorem:
    case Check::corollaries:
    case Check::pipeline:
        for (int j : s.j) {
            if (check == Check::corollaries && (j < -3 || j > 3)) {
                continue;
            }
            for (const auto& a : s.a) {
                for (const auto& b : s.b) {
                    for (const auto& d : s.d) {
                        for (const auto& e : s.e) {
                            IdentityCase c{j, a, b, d, e};
                            tasks.emplace_back([c, check, &opts] {
                                switch (check) {
                                case Check::theorem:
                                    return verify_theorem(c, opts);
                                case Check::corollaries:
                                    return verify_corollary(c, opts);
                                default:
                                    return verify_pipeline(c, opts);
                                }
                            });
                        }
                    }
                }
            }
        }
        return;
    }
}

}  // namespace

std::vector<VerificationRecord> grid_sweep(const GridSets& sets, const std::vector<Check>& checks,
                                           const SweepOptions& options)
{
    std::vector<Task> tasks;
    for (Check check : checks) {
        enumerate(sets, check, options.verify, tasks);
    }
    std::vector<VerificationRecord> results(tasks.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            results[i] = tasks[i]();
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    results[i] = tasks[i]();
                }
            });
        }
    }
    return results;
}

}  // namespace hyperverify
