#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "formedflags/oracle.hpp"
#include "formedflags/report.hpp"
#include "formedflags/streams.hpp"

namespace formedflags {

struct SuiteOptions {
    std::uint64_t max_group_size = kDefaultMaxGroupSize;
    std::uint64_t max_oracle_ops = kDefaultMaxOracleOps;
};

// One acceptance criterion: its reports plus free-form lines for the
// exploratory ones. An exception inside a check is recorded as a failed
// report, never swallowed.
struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<VerificationReport> reports;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const;
    long long instances() const;
};

inline constexpr int kNumCriteria = 9;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const SuiteOptions& opt = {});

// golden, conjecture, theorems, oracle-cross, lemmas, explore or all.
std::vector<int> suite_criteria(const std::string& name);

} // namespace formedflags
