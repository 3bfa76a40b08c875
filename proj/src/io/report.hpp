#pragma once

#include <json.hpp>

#include "io/input.hpp"
#include "stab/stability.hpp"

namespace toric::io {

inline constexpr const char* kToolName = "toricstab";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchema = "toricstab-report/1";

struct JobOptions {
    std::string command = "analyze";
    std::vector<int> dilations; // overrides the input document when nonempty
    bool emit_certificates = true;
    bool emit_svg = false;
    long max_triangulations = 100000;
    int jobs = 1;
    std::vector<RatVec> heights; // k-check
};

struct RunResult {
    nlohmann::ordered_json report;
    int exit_code = 0; // 0 all pass, 1 some verdict failed
    std::vector<std::pair<std::string, std::string>> artifacts; // svg name -> bytes
};

// Dispatches one command over one input document. Throws input_error /
// scale_error; those map to exit codes 2 and 3 at the boundary.
RunResult run_job(const InputDocument& input, const JobOptions& opts);

// Machine rendering is canonical: identical inputs give identical bytes.
std::string render_machine(const nlohmann::ordered_json& report);
std::string render_human(const nlohmann::ordered_json& report);

struct VerifyResult {
    bool ok = false;
    std::string summary;
};

// Re-validates every certificate embedded in a machine report using only the
// exact geometry layer: convex combinations, separators, witness systems and
// the degree/geometry echoes. Never re-runs the enumeration.
VerifyResult verify_report(const std::string& report_json);

} // namespace toric::io
