#pragma once

#include "metchar/runconfig.hpp"

namespace metchar::cli {

// Exit codes shared by every subcommand:
//   0 success
//   2 configuration / validation error
//   3 data error (missing or malformed input files)
//   4 budget exhausted, partial result written
//   5 every component pruned (hybrid), phase-1 result written
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitAllPruned = 5;

int cmd_extract(const RunConfig& cfg);
int cmd_train(const RunConfig& cfg);
int cmd_select(const RunConfig& cfg);
int cmd_eval(const RunConfig& cfg);
int cmd_synth(const RunConfig& cfg);

}  // namespace metchar::cli
