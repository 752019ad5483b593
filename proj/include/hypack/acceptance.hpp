#pragma once

// Acceptance suite A1-A11, shared by the test binary and `hypack verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hypack {

struct AcceptanceOptions {
    std::uint64_t seed = 0x5eedULL;
    unsigned workers = 0;
    /// Negative control: shrink every tolerance by 1e-9 so the suite must fail.
    bool tamper = false;
};

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    nlohmann::json measured;
    double seconds = 0.0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// "A1 PASS <title>: <detail>"
std::string format_line(const CriterionResult& r);
nlohmann::json acceptance_report(const std::vector<CriterionResult>& results, const AcceptanceOptions& opts);

}  // namespace hypack
