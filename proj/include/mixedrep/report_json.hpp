#pragma once

// JSON-lines serialization of verification reports. The field order is
// fixed (check, params, status, witnesses, elapsed_ms, bound_note) and no
// value is floating-point, so byte-identical runs diff cleanly.

#include <string>
#include <variant>

#include "json.hpp"

#include "mixedrep/verify.hpp"

namespace mixedrep::report_json {

inline nlohmann::ordered_json to_json(const verify::VerificationReport& report) {
    nlohmann::ordered_json j;
    j["check"] = report.check;
    auto params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = params;
    j["status"] = verify::to_string(report.status);
    auto witnesses = nlohmann::ordered_json::array();
    for (const auto& w : report.witnesses) {
        if (const auto* n = std::get_if<int64_t>(&w)) {
            witnesses.push_back(*n);
        } else {
            witnesses.push_back(std::get<std::vector<int64_t>>(w));
        }
    }
    j["witnesses"] = witnesses;
    j["elapsed_ms"] = static_cast<int64_t>(report.elapsed.count());
    j["bound_note"] = report.bound_note;
    return j;
}

inline std::string to_json_line(const verify::VerificationReport& report) {
    return to_json(report).dump();
}

}  // namespace mixedrep::report_json
