#include "qlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace qlab {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
    }
    return "?";
}

void Report::pass(const std::string& name, const std::string& residual) {
    checks_.push_back({name, CheckStatus::Pass, residual, "", 0.0});
}

void Report::fail(const std::string& name, const std::string& residual,
                  const std::string& witness) {
    checks_.push_back({name, CheckStatus::Fail, residual, witness, 0.0});
}

void Report::skip(const std::string& name, const std::string& reason) {
    checks_.push_back({name, CheckStatus::Skip, "", reason, 0.0});
}

void Report::add(CheckResult r) { checks_.push_back(std::move(r)); }

void Report::merge(const Report& other, const std::string& prefix) {
    for (CheckResult c : other.checks_) {
        c.name = prefix + c.name;
        checks_.push_back(std::move(c));
    }
}

void Report::check_zero(const std::string& name, const Operator& diff) {
    auto nz = diff.first_nonzero();
    if (!nz) {
        pass(name);
        return;
    }
    auto [i, j] = *nz;
    std::ostringstream os;
    os << "entry (" << diff.row_labels()[i] << ", " << diff.col_labels()[j]
       << ") = " << diff.at(i, j).str();
    fail(name, diff.at(i, j).serialize(), os.str());
}

void Report::check_true(const std::string& name, bool okv, const std::string& witness) {
    if (okv)
        pass(name);
    else
        fail(name, "1", witness);
}

void Report::check_residual(const std::string& name, double residual, double tol) {
    if (std::abs(residual) <= tol)
        pass(name, format_residual(residual));
    else
        fail(name, format_residual(residual), "exceeds tol " + format_residual(tol));
}

bool Report::ok() const {
    for (const auto& c : checks_)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

int Report::count(CheckStatus s) const {
    int n = 0;
    for (const auto& c : checks_) n += (c.status == s);
    return n;
}

std::string format_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", r);
    return buf;
}

namespace {

nlohmann::ordered_json report_to_json(const SuiteReport& r, bool timings) {
    nlohmann::ordered_json j;
    j["schema"] = "qlab-report/1";
    j["suite"] = r.suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    auto checks = r.report.checks();
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = to_string(c.status);
        cj["residual"] = c.residual;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (timings) cj["wall_ms"] = c.wall_ms;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    j["summary"] = {{"pass", r.report.count(CheckStatus::Pass)},
                    {"fail", r.report.count(CheckStatus::Fail)},
                    {"skip", r.report.count(CheckStatus::Skip)}};
    return j;
}

} // namespace

std::string suite_report_json(const SuiteReport& r, bool timings) {
    return report_to_json(r, timings).dump(2) + "\n";
}

std::string suite_report_text(const SuiteReport& r, bool timings) {
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    for (const auto& [k, v] : r.params) os << "  param " << k << " = " << v << "\n";
    auto checks = r.report.checks();
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    for (const auto& c : checks) {
        os << "  [" << to_string(c.status) << "] " << c.name;
        if (!c.residual.empty()) os << "  residual=" << c.residual;
        if (!c.witness.empty()) os << "  (" << c.witness << ")";
        if (timings) os << "  [" << c.wall_ms << " ms]";
        os << "\n";
    }
    os << "  summary: " << r.report.count(CheckStatus::Pass) << " pass, "
       << r.report.count(CheckStatus::Fail) << " fail, " << r.report.count(CheckStatus::Skip)
       << " skip\n";
    return os.str();
}

} // namespace qlab
