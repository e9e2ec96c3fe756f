#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eisq/graph.hpp"

namespace eisq {

/// Outcome of one verification check: how many instances fell in its
/// quantifier domain, which graphs violated the claim (none expected), and
/// timeouts (counted as refusals, never as agreements).
struct CheckResult {
    std::string name;
    std::string domain;
    std::uint64_t checked = 0;
    std::uint64_t refused = 0;
    std::vector<std::string> counterexamples;  // graph6, sorted
    std::vector<std::string> notes;            // e.g. the exceptional graphs a sweep found
    std::vector<std::pair<std::string, long long>> stats;
    double seconds = 0;

    bool ok() const { return counterexamples.empty(); }
};

struct VerifyOptions {
    /// Check names to run; empty means all. Unknown names are refused.
    std::vector<std::string> which;
    /// Cap on the enumerated order; -1 keeps each check's own default.
    int max_n = -1;
    std::uint32_t characteristic = 2;
    int jobs = 1;  // 0 = hardware concurrency
    int timeout_ms = 10'000;
};

struct VerificationReport {
    int max_n = 0;
    std::uint32_t characteristic = 2;
    std::uint64_t graphs_processed = 0;
    std::uint64_t graphs_refused = 0;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool ok() const {
        for (const CheckResult& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

std::vector<std::string> verify_check_names();

VerificationReport verify_theorems(const VerifyOptions& options = {});

std::string to_json(const CheckResult& check);
std::string to_json(const VerificationReport& report);

}  // namespace eisq
