#pragma once

// Named check suites, one per verified statement, aggregating the module
// checks into machine-readable reports.  JSON is the canonical output.

#include <optional>
#include <string>
#include <vector>

#include <stdexcept>

namespace kleinian {

struct UnknownSuite : std::runtime_error {
    explicit UnknownSuite(const std::string& name)
        : std::runtime_error("unknown suite '" + name + "'") {}
};

enum class CheckStatus { Pass, Fail, Assumption };
const char* check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string actual;
    std::optional<std::string> witness;
    std::string paper_ref;
};

struct SuiteConfig {
    int depth = 6;         // default search radius
    int depth_delta0 = 8;  // radius for <s,t> certificates (10 for the t-conjugate)
    long budget = 2000000;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    std::string anchor;
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> results;
    long elapsed_ms = 0;

    int failures() const;
    int assumptions() const;
    bool all_ok() const { return failures() == 0; }
};

// The fourteen runnable names: thirteen statement suites plus "all".
const std::vector<SuiteInfo>& list_suites();

// Runs one suite ("all" concatenates every statement suite in order).
// Throws UnknownSuite for anything not in list_suites().
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = SuiteConfig{});

std::string to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

}  // namespace kleinian
