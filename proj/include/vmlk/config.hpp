#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vmlk/error.hpp"
#include "vmlk/grid.hpp"
#include "vmlk/maxwell_eq.hpp"
#include "vmlk/verify.hpp"
#include "vmlk/vlasov.hpp"

namespace vmlk {

/// Malformed or invalid scenario configuration. The message names the line.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ScenarioConfig {
  // grid
  double L = 6.0;  // 6 sqrt(T_ref) unless set explicitly
  int N = 16;
  int M = 8;
  // physics
  double nu = 1.0;
  double rho_ion = 1.0;
  double T_ref = 1.0;
  Vec3 B0{0.0, 0.0, 0.0};
  // run
  double dt = 1e-2;
  double t_end = 5.0;
  int record_every = 1;
  std::uint64_t seed = 1;
  /// relax: bimaxwellian | maxwellian | random; vpl: perturbed | maxwellian
  std::string initial;
  /// Initial Maxwellian; rho and T default to rho_ion and T_ref.
  std::optional<MaxwellianParams> maxwellian;
  /// Density perturbation amplitude of the vpl `perturbed` initial state.
  double amplitude = 0.05;
  /// check / pipeline candidate: equilibrium | drifting | varying_T | nonharmonic_B
  std::string candidate = "equilibrium";
  std::string E_file;
  std::string B_file;
  /// Grid size of the `bench` subcommand.
  int bench_N = 16;
  int bench_repeats = 3;
  // tolerances
  SteadyStateTolerances steady;
  PipelineTolerances pipeline;
  HypothesisTolerances hypotheses;
  std::string out = ".";
};

/// Plain `key = value` lines; `#` starts a comment. Unknown keys, malformed
/// values and constraint violations throw ConfigError naming the line.
ScenarioConfig parse_config_text(std::string_view text, const std::string& source = "<config>");
ScenarioConfig parse_config(const std::string& path);

}  // namespace vmlk
