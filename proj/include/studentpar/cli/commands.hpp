#pragma once

#include <functional>
#include <ostream>

#include <nlohmann/json.hpp>

#include "studentpar/cli/config.hpp"

namespace studentpar::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUserError = 2;
inline constexpr int kExitNumeric = 3;

// Each command writes its outputs plus manifest.json into run.out and returns
// the manifest summary.
//
// distill:  teacher checkpoint(s), student_<i>.ckpt, convergence.json, distill.json
// prune:    accuracy_table.csv, classifier.ckpt, prune.json
// simulate: metrics.json, latency.csv
// perf:     factor_table.csv
// report:   comparison.csv, series.csv
nlohmann::json cmd_distill(const RunConfig& run);
nlohmann::json cmd_prune(const RunConfig& run);
nlohmann::json cmd_simulate(const RunConfig& run);
nlohmann::json cmd_perf(const RunConfig& run);
nlohmann::json cmd_report(const RunConfig& run);

nlohmann::json run_command(const RunConfig& run);

// Runs `body`, mapping exceptions onto exit codes: config, input and contract
// errors give 2, numeric failures 3. The message goes to `err`.
int guarded(const std::function<void()>& body, std::ostream& err);

}  // namespace studentpar::cli
