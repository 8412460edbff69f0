#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "battery.hpp"

namespace asmkit {

enum class Suite { identities, partition, functions, all };

inline std::optional<Suite> parse_suite(std::string_view s) {
    if (s == "identities") return Suite::identities;
    if (s == "partition") return Suite::partition;
    if (s == "functions") return Suite::functions;
    if (s == "all") return Suite::all;
    return std::nullopt;
}

inline std::vector<CheckSpec> suite_checks(Suite s) {
    std::vector<CheckSpec> out;
    auto append = [&out](std::vector<CheckSpec> v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    if (s == Suite::identities || s == Suite::all) append(identity_checks());
    if (s == Suite::partition || s == Suite::all) append(partition_checks());
    if (s == Suite::functions || s == Suite::all) append(function_checks());
    return out;
}

/// Runs every (check, n) job of a suite on a pool of `threads` workers.
/// Each job draws from its own seeded stream and reports are assembled in
/// check order, so the result does not depend on scheduling. The first
/// exception in job order is rethrown.
inline std::vector<IdentityReport> run_checks(const std::vector<CheckSpec>& checks, int max_n, int samples,
                                              std::uint64_t seed, int threads, CountCache& counts) {
    struct Job {
        std::size_t check;
        int n;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < checks.size(); ++i)
        for (int n = checks[i].n_min; n <= effective_max(checks[i], max_n); ++n) jobs.push_back({i, n});

    std::vector<CaseOutcome> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) {
            try {
                results[j] = run_case(checks[jobs[j].check], jobs[j].n, counts, seed, samples);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, threads);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<IdentityReport> reports;
    std::size_t j = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::vector<CaseOutcome> cases;
        while (j < jobs.size() && jobs[j].check == i) cases.push_back(std::move(results[j++]));
        reports.push_back(fold_report(checks[i], effective_max(checks[i], max_n), cases));
    }
    return reports;
}

inline std::vector<IdentityReport> run_suite(Suite s, int max_n, int samples, std::uint64_t seed, int threads = 1) {
    CountCache counts;
    return run_checks(suite_checks(s), max_n, samples, seed, threads, counts);
}

}  // namespace asmkit
