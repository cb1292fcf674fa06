#pragma once

// Named verification suites and their reporting.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "picard/kernels.hpp"

namespace picard {

struct CheckResult {
    std::string check;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    bool passed() const;
};

struct VerifyOptions {
    int precision = 24;
    std::uint64_t seed = 0;
    /// Cohomology group: "s3", "sl2f3", "z2-trivial" or empty for all three.
    std::string group;
    ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

/// Bad suite name or option combination; maps to exit status 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxPrecision = 64;

/// invariants, transforms, aut-characters, char3-legendre, char2-hesse, cohomology.
const std::vector<std::string>& suite_names();
const std::vector<std::string>& cohomology_groups();

/// Throws UsageError for an unknown suite or group, or a precision outside
/// the window the suite needs.
void validate(const std::string& suite, const VerifyOptions& options);

/// Runs one suite, or every suite for "all"; results are ordered by suite name.
std::vector<SuiteResult> run(const std::string& suite, const VerifyOptions& options);

bool all_passed(const std::vector<SuiteResult>& results);

/// Key-ordered record without timings, so identical inputs give identical bytes.
nlohmann::json to_json(const std::vector<SuiteResult>& results, const VerifyOptions& options);
/// Aligned table with per-suite wall time.
std::string to_text(const std::vector<SuiteResult>& results, const VerifyOptions& options);

}  // namespace picard
