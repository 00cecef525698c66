#pragma once

#include <string>

#include <json.hpp>

#include "kpath/trial_report.hpp"

namespace kpath::harness {

// Key order is fixed so reports are byte-stable across runs with the same
// seed; wall_time is the only field that varies.
nlohmann::ordered_json report_to_json(const TrialReport& report);

// Bench row: the report plus instance metadata.
nlohmann::ordered_json bench_record(const TrialReport& report, const std::string& family,
                                    int n, int m, int rep);

std::string decision_name(Decision d);

}  // namespace kpath::harness
