#include "repfuse/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

namespace repfuse {

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["check"] = r.check;
    j["anchor"] = r.anchor;
    j["params"] = r.params;
    j["residual"] = r.residual ? nlohmann::ordered_json(*r.residual) : nlohmann::ordered_json();
    j["tolerance"] = r.tolerance ? nlohmann::ordered_json(*r.tolerance) : nlohmann::ordered_json();
    j["result"] = r.result ? nlohmann::ordered_json(*r.result) : nlohmann::ordered_json();
    j["expected"] = r.expected ? nlohmann::ordered_json(*r.expected) : nlohmann::ordered_json();
    j["pass"] = r.pass;
    j["timestamp"] = r.timestamp;
    return j;
}

std::string reports_to_json(std::vector<VerificationReport> reports) {
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.check < b.check; });
    std::string stamp = utc_timestamp();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (VerificationReport& r : reports) {
        if (r.timestamp.empty()) r.timestamp = stamp;
        arr.push_back(report_to_json(r));
    }
    return arr.dump(2) + "\n";
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass; });
}

}  // namespace repfuse
