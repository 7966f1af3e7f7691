#pragma once

#include <string>
#include <vector>

#include "repfuse/config.hpp"
#include "repfuse/report.hpp"

namespace repfuse {

// Verification suites runnable from the CLI and the acceptance tests.
// "structure" holds the symbolic structure-theorem checks; the others are
// numeric.  Every check name maps to exactly one anchor string.
std::vector<std::string> suite_names();

std::vector<VerificationReport> run_suite(const std::string& name, const Config& cfg);

std::vector<VerificationReport> run_suites(const std::vector<std::string>& names,
                                           const Config& cfg);

}  // namespace repfuse
