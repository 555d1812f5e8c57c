#pragma once

#include <string>
#include <vector>

#include "rbi/verifier/config.hpp"
#include "rbi/verifier/report.hpp"

namespace rbi {

/// Every suite name accepted by run_suite except "all".
const std::vector<std::string>& suite_names();

/// Runs the checks of cfg.suite (or of every suite for "all") on a worker
/// pool and returns the reports sorted by check_id. A check that throws is
/// reported with status error. Throws UnknownSuite.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

}  // namespace rbi
