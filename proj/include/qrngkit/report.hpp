#pragma once

#include <string>

#include <json.hpp>

#include "qrngkit/battery.hpp"

namespace qrngkit::sp90b {

/// Full report tree: dimensions, sanity block, per-test aggregates, and
/// every group's statistics. report_from_json(report_to_json(r)) == r.
nlohmann::json report_to_json(const BatteryReport& report);
BatteryReport report_from_json(const nlohmann::json& j);

/// One row per test (sanity, independence, goodness_of_fit, lrs) with the
/// worst-case MCV / min-entropy columns filled for the sanity row and the
/// median / min / below-threshold columns for the IID tests.
std::string report_to_csv(const BatteryReport& report);

}  // namespace qrngkit::sp90b
