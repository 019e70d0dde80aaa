#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "vmlk/cli.hpp"
#include "vmlk/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"vmlk: Vlasov-Maxwell-Landau steady-state residuals, relaxation and equilibrium audit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int threads = 0;
  const char* names[] = {"relax", "vpl", "check", "pipeline", "nonvacuous", "bench"};
  const char* help[] = {"space-homogeneous Landau relaxation",
                        "electrostatic Vlasov-Poisson-Landau splitting run",
                        "steady-state residual report for a candidate",
                        "seven-step equilibrium audit of a candidate",
                        "equilibrium Maxwellian self-test",
                        "collision kernel throughput"};
  for (int k = 0; k < 6; ++k) {
    CLI::App* sub = app.add_subcommand(names[k], help[k]);
    sub->add_option("--config", config_path, "key = value scenario file (defaults when omitted)");
    sub->add_option("--out", out_dir, "output directory (overrides the config)");
    sub->add_option("--threads", threads, "OpenMP threads (falls back to VMLK_THREADS)")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vmlk::kExitUsage;
  }

  if (threads == 0) {
    if (const char* env = std::getenv("VMLK_THREADS")) {
      try {
        threads = std::stoi(env);
      } catch (const std::exception&) {
        threads = 0;
      }
      if (threads < 1) {
        std::cerr << "VMLK_THREADS must be a positive integer\n";
        return vmlk::kExitUsage;
      }
    }
  }
  if (threads > 0) omp_set_num_threads(threads);

  vmlk::ScenarioConfig cfg;
  try {
    cfg = config_path.empty() ? vmlk::parse_config_text("") : vmlk::parse_config(config_path);
  } catch (const vmlk::ConfigError& e) {
    std::cerr << e.what() << '\n';
    return vmlk::kExitUsage;
  }
  if (!out_dir.empty()) cfg.out = out_dir;

  const std::string name = app.get_subcommands().front()->get_name();
  return vmlk::run_subcommand(name, cfg, std::cout);
}
