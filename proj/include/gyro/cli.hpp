#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gyro::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Result of one command-line invocation. `report` is the machine-readable
/// payload; `out` is what is printed on stdout (the JSON payload with --json,
/// a rendering of it otherwise).
struct RunResult {
    int exit_code = kExitPass;
    nlohmann::json report;
    std::string out;
    std::string err;
};

/// args excludes the program name.
RunResult run(const std::vector<std::string>& args);

/// Human-readable rendering of a report produced by run().
std::string render_human(const nlohmann::json& report);

}  // namespace gyro::cli
