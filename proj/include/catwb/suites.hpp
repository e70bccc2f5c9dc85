#pragma once

#include "catwb/serialize.hpp"
#include "catwb/wgroup.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace catwb {

struct SuiteOptions {
    Limits limits;
    uint64_t seed = 7;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    bool gating = true;      // false for outcomes that are reported only
    std::string detail;
    json report;             // VerificationReport JSON or parameter dumps, may be null

    json to_json() const;
};

using CheckCallback = std::function<void(const CheckResult&)>;

std::vector<CheckResult> suite_recurrence(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_row_sums(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_fm_closed(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_fm_formula(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_fm_brute(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_chains(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_dual(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_carlitz(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_oracles(const SuiteOptions& o, const CheckCallback& cb = {});
std::vector<CheckResult> suite_open_dn(const SuiteOptions& o, const CheckCallback& cb = {});

// fm, recurrence, chains, dual, carlitz, or all (every suite above).
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o, const CheckCallback& cb = {});

// Weak compositions of n into at most n + 1 parts.
std::vector<std::vector<int>> jump_vectors(int n);

} // namespace catwb
