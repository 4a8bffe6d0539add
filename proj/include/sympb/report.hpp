#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sympb {

struct VerifyReport {
    std::string check;    // "phase-area/ellipse(2,1)"
    std::string anchor;   // statement under test, by content
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double runtime_sec = 0.0;
    std::string note;     // free-form detail (period sets, slopes, counts)
};

inline bool all_pass(const std::vector<VerifyReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

// JSON document with schema "sympb/1".
std::string reports_to_json(const std::vector<VerifyReport>& reports, std::uint64_t seed);

// One "[PASS]/[FAIL] check: measured vs expected (tol)" line per report.
void print_reports(const std::vector<VerifyReport>& reports);

}  // namespace sympb
