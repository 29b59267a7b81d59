#pragma once

#include <string>
#include <vector>

#include "jmcalc/theorems.hpp"

namespace jmcalc {

inline constexpr const char* kEngineVersion = "1.0.0";

struct ReportSummary {
    long pass = 0;
    long partial = 0;
    long fail = 0;

    friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

// Verification certificate for one parameter triple: the finished check
// results in a fixed order, plus the status tally.
struct Report {
    CheckParams params{};
    std::string engine_version;
    std::vector<CheckResult> checks;  // sorted by id
    ReportSummary summary;

    // Sorts the checks by id and tallies the summary.
    static Report build(const CheckParams& params, std::vector<CheckResult> checks);

    // Deterministic serialization: fixed field order, two-space indent, one
    // trailing newline. Half-integers cross as doubled integers ("a2" holds
    // 2a); no floating point appears anywhere.
    std::string to_json() const;

    // Inverse of to_json; throws std::invalid_argument on malformed input.
    static Report from_json(const std::string& text);

    friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace jmcalc
