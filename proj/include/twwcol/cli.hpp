#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace twwcol::cli {

// Exit status plus the structured run report. Report fields:
//   command, instance {n, m, N, black_edges, red_edges}, width {...},
//   verdicts {...}, checks [{name, status, detail}], wall_time_ms, seed.
// Everything except wall_time_ms is reproducible from the inputs.
struct RunResult {
    int exit_code = 0;
    nlohmann::ordered_json report;
    std::string help;  // set instead of a report for --help
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Oracle node budget override.
inline constexpr const char *kBudgetEnv = "TWWCOL_BUDGET";

// args excludes the program name.
RunResult dispatch(const std::vector<std::string> &args);

}  // namespace twwcol::cli
