#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace repfuse {

// One persisted verification record.  Numeric checks satisfy
// pass == (residual <= tolerance); symbolic checks satisfy
// pass == (result == expected).
struct VerificationReport {
    std::string check;   // unique check name, e.g. "haar/shifts"
    std::string anchor;  // the verification anchor the check certifies
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::optional<double> residual;
    std::optional<double> tolerance;
    std::optional<std::string> result;    // symbolic outcome
    std::optional<std::string> expected;  // symbolic reference
    bool pass = false;
    std::string timestamp;  // filled at serialisation time
};

nlohmann::ordered_json report_to_json(const VerificationReport& r);

// Serialises as a JSON array sorted by check name; every element carries
// "schema": 1.  Deterministic apart from the timestamp field.
std::string reports_to_json(std::vector<VerificationReport> reports);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace repfuse
