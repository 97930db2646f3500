#pragma once

#include <optional>

#include "qlab/report.hpp"

namespace qlab {

struct SuiteOptions {
    std::optional<int> n;        // lattice/cube dimension or Witt index
    std::optional<long long> q;
    double tol = 1e-8;           // floating checks only
    long long limit = 100000;    // enumeration cap (Lagrangians; subspaces use 10x)
};

/// Registered suite names, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or "all") over its default parameter grid, restricted
/// by the options; unsupported parameters produce skip entries, never errors.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt = {});

} // namespace qlab
