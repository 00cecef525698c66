#include "report_json.hpp"

namespace kpath::harness {

std::string decision_name(Decision d) {
    return d == Decision::yes ? "YES" : "NO";
}

nlohmann::ordered_json report_to_json(const TrialReport& report) {
    nlohmann::ordered_json j;
    j["algorithm"] = std::string(algorithm_name(report.algorithm));
    j["k"] = report.k;
    j["seed"] = report.seed;
    j["trials_run"] = report.trials_run;
    j["decision"] = decision_name(report.decision);
    if (report.witness) j["witness"] = report.witness->vertices;
    // Counts exceed 64 bits on dense graphs; decimal string keeps them exact.
    if (report.count) j["count"] = report.count->str();
    j["wall_time"] = report.wall_time;
    return j;
}

nlohmann::ordered_json bench_record(const TrialReport& report, const std::string& family,
                                    int n, int m, int rep) {
    nlohmann::ordered_json j = report_to_json(report);
    j["family"] = family;
    j["n"] = n;
    j["m"] = m;
    j["rep"] = rep;
    return j;
}

}  // namespace kpath::harness
