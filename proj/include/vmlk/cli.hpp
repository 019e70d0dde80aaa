#pragma once

#include <iosfwd>
#include <string>

#include "vmlk/config.hpp"

namespace vmlk {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs relax, vpl, check, pipeline, nonvacuous or bench and writes its
/// reports under cfg.out. Returns 0 when every check passes, 1 when a check
/// fails or the computation aborts (a report is written either way), and 2 for
/// an unknown subcommand or unusable input.
int run_subcommand(const std::string& name, const ScenarioConfig& cfg, std::ostream& log);

}  // namespace vmlk
