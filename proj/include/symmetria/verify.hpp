#pragma once

// Verification suites shared by the CLI `verify` command and the test
// binaries. Each suite runs a battery of named checks and reports them
// individually; a suite passes iff every check passes.

#include <string>
#include <vector>

namespace symmetria {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // short summary: orders compared, max n, etc.
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const;
};

struct VerifyOptions {
    int order = 12;       // series truncation order for identity checks
    int max_n = 8;        // exhaustive-enumeration ceiling for bijections
    std::string fixture_dir;  // empty = compiled-in default
};

// Round-trips and statistic transport of every bijection over all objects of
// each size up to max_n.
SuiteResult verify_bijections(const VerifyOptions& opt);
// Catalog closed forms against brute-force enumeration series and against
// alternative closed-form routes.
SuiteResult verify_series_identities(const VerifyOptions& opt);
// Walk functional equations (residual identically zero, and a perturbation
// sanity check that the residual detects a wrong equation).
SuiteResult verify_feq(const VerifyOptions& opt);
// Closed-form moments against exact distributions.
SuiteResult verify_moments(const VerifyOptions& opt);
// Limit-law convergence: KS distance decreasing along n in {50,100,200,400}
// and small at 400; mean scaling constants.
SuiteResult verify_limits(const VerifyOptions& opt);
// Sequence fixtures against library routes.
SuiteResult verify_oeis(const VerifyOptions& opt);

std::vector<std::string> verify_suite_names();
// Runs one suite by name ("all" runs every suite in the order above).
std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opt);

// JSON report: {"suites": [{"suite": .., "ok": .., "checks": [..]}], "ok": ..}.
std::string verify_report_json(const std::vector<SuiteResult>& results);
// Plain-text report, one line per check.
std::string verify_report_text(const std::vector<SuiteResult>& results);

}  // namespace symmetria
