#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace blobtilt {

enum class CheckStatus { pass, fail, report_only };

inline std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "report-only";
    }
}

/**
 * CheckReport: one verification outcome.  `source` records where the
 * expected value comes from (paper-table | recursion | certificate |
 * identity).  Wall time is shown in text output only; JSON reports stay
 * byte-identical across runs with the same config and seed.
 */
struct CheckReport {
    std::string name;
    std::string params;
    CheckStatus status = CheckStatus::fail;
    std::string expected;
    std::string observed;
    std::string source;
    double wall_ms = 0.0;

    nlohmann::json to_json() const {
        return nlohmann::json{{"name", name},       {"params", params},
                              {"status", status_name(status)},
                              {"expected", expected}, {"observed", observed},
                              {"source", source}};
    }
};

struct ReportSummary {
    int pass = 0;
    int fail = 0;
    int report_only = 0;

    void count(const CheckReport& r) {
        switch (r.status) {
            case CheckStatus::pass: ++pass; break;
            case CheckStatus::fail: ++fail; break;
            case CheckStatus::report_only: ++report_only; break;
        }
    }

    nlohmann::json to_json() const {
        return nlohmann::json{
            {"pass", pass}, {"fail", fail}, {"report_only", report_only}};
    }
};

inline nlohmann::json reports_to_json(const nlohmann::json& config,
                                      const std::vector<CheckReport>& checks) {
    ReportSummary summary;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        summary.count(c);
        arr.push_back(c.to_json());
    }
    return nlohmann::json{
        {"config", config}, {"checks", arr}, {"summary", summary.to_json()}};
}

}  // namespace blobtilt
