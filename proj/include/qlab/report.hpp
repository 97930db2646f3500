#pragma once

#include <map>
#include <string>
#include <vector>

#include "qlab/matrix.hpp"

namespace qlab {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string residual; // "0" for exact passes, max-abs value for floating checks
    std::string witness;  // offending entry / reason for skip (optional)
    double wall_ms = 0.0;
};

/// Ordered list of named check outcomes; the building block of every verifier.
class Report {
public:
    void pass(const std::string& name, const std::string& residual = "0");
    void fail(const std::string& name, const std::string& residual, const std::string& witness);
    void skip(const std::string& name, const std::string& reason);
    void add(CheckResult r);
    void merge(const Report& other, const std::string& prefix = "");

    /// Pass iff the operator difference is exactly zero; witness names the
    /// first offending entry otherwise.
    void check_zero(const std::string& name, const Operator& diff);
    void check_true(const std::string& name, bool ok, const std::string& witness = "");
    /// Floating check: passes iff |residual| <= tol.
    void check_residual(const std::string& name, double residual, double tol);

    bool ok() const;
    int count(CheckStatus s) const;
    const std::vector<CheckResult>& checks() const { return checks_; }
    std::vector<CheckResult>& checks() { return checks_; }

private:
    std::vector<CheckResult> checks_;
};

struct SuiteReport {
    std::string suite;
    std::map<std::string, std::string> params;
    Report report;

    bool ok() const { return report.ok(); }
};

std::string format_residual(double r);

/// Serializations are deterministic: checks sorted by name, params sorted by
/// key, timings omitted unless requested.
std::string suite_report_json(const SuiteReport& r, bool timings = false);
std::string suite_report_text(const SuiteReport& r, bool timings = false);

} // namespace qlab
