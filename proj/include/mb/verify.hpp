#pragma once

// Exact property-verification suites over the whole library: every identity
// is checked by comparing two independent computation routes (or a closed
// form against a brute-force enumeration) with zero tolerance. A failure
// report carries the first counterexample's parameters and both values.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mb {

struct VerifyBounds {
    std::int64_t max_n = 30;
    int max_k = 10;
    int max_N = 5;
    int order = 16;  // series truncation for generating-function checks
};

// documented caps: 2 <= max_n <= 100, 0 <= max_k <= min(order, 20),
// 1 <= max_N <= 8, 4 <= order <= 64
void validate_bounds(const VerifyBounds& b);

struct VerifyFailure {
    std::string params;
    std::string lhs, rhs;
};

struct PropertyResult {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failure_count = 0;
    std::vector<VerifyFailure> failures;  // first few counterexamples
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;
    std::vector<std::string> notes;  // always-printed comparisons, not failures

    std::int64_t total_checks() const;
    std::int64_t total_failures() const;
    bool ok() const { return total_failures() == 0; }
};

SuiteReport verify_arith(const VerifyBounds& b, int jobs = 1);
SuiteReport verify_series(const VerifyBounds& b, int jobs = 1);
SuiteReport verify_bernoulli(const VerifyBounds& b, int jobs = 1);
SuiteReport verify_mb(const VerifyBounds& b, int jobs = 1);
SuiteReport verify_psi(const VerifyBounds& b, int jobs = 1);

// which: all|arith|series|bernoulli|mb|psi
std::vector<SuiteReport> run_suites(const std::string& which, const VerifyBounds& b, int jobs = 1);

// deterministic line protocol: "ok <suite>.<property> checks=N",
// "FAIL <suite>.<property> ... first={...}", "note <suite>.<name> ...",
// per-suite and global summaries
void write_reports(std::ostream& os, const std::vector<SuiteReport>& reports,
                   const std::string& which);

bool reports_ok(const std::vector<SuiteReport>& reports);

}  // namespace mb
