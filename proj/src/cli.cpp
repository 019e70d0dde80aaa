#include "vmlk/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "vmlk/field_io.hpp"
#include "vmlk/fixtures.hpp"
#include "vmlk/landau.hpp"
#include "vmlk/relax.hpp"
#include "vmlk/verify.hpp"
#include "vmlk/vlasov.hpp"

namespace vmlk {
namespace {

namespace fs = std::filesystem;

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path.string() + "' for writing");
  os << j.dump(2) << '\n';
}

MaxwellianParams initial_maxwellian(const ScenarioConfig& cfg) {
  if (cfg.maxwellian) return *cfg.maxwellian;
  return {cfg.rho_ion, {0.0, 0.0, 0.0}, cfg.T_ref};
}

// Candidate (f, E, B) for check and pipeline, with optional field files.
Candidate load_candidate(const ScenarioConfig& cfg) {
  const VelocityGrid vg = make_velocity_grid(cfg.L, cfg.N);
  const TorusGrid tg(cfg.M);
  Candidate c = named_candidate(cfg.candidate, tg, vg, cfg.rho_ion, cfg.T_ref, cfg.B0);
  c.nu = cfg.nu;
  if (!cfg.E_file.empty()) c.E = read_vec_csv(cfg.E_file);
  if (!cfg.B_file.empty()) c.B = read_vec_csv(cfg.B_file);
  if (!(c.E.grid == tg) || !(c.B.grid == tg))
    throw GridMismatchError("field files must be sampled on the M = " + std::to_string(cfg.M) + " torus grid");
  return c;
}

int relax(const ScenarioConfig& cfg, const fs::path& out, std::ostream& log) {
  const VelocityGrid vg = make_velocity_grid(cfg.L, cfg.N);
  std::vector<double> f0;
  const std::string initial = cfg.initial.empty() ? "bimaxwellian" : cfg.initial;
  if (initial == "bimaxwellian") {
    f0 = bi_maxwellian(vg, {1.0, 0.0, 0.0}, cfg.T_ref);
    for (double& x : f0) x *= cfg.rho_ion;
  } else if (initial == "maxwellian") {
    f0 = sample_maxwellian(vg, initial_maxwellian(cfg));
  } else if (initial == "random") {
    f0 = random_band_limited(vg, cfg.seed);
  } else {
    throw ConfigError("relax: initial must be bimaxwellian, maxwellian or random");
  }

  nlohmann::json report;
  try {
    const HomogeneousRun run = run_homogeneous(vg, f0, cfg.nu, cfg.dt, cfg.t_end, cfg.record_every);
    std::ofstream csv(out / "diagnostics.csv");
    write_diagnostics_csv(csv, run.records);
    const DiagnosticsRecord& last = run.records.back();
    report = {{"initial", initial},
              {"records", run.records.size()},
              {"h_monotone", run.h_monotone},
              {"max_halvings", run.max_halvings},
              {"target", {{"rho", run.target.rho}, {"u", run.target.u}, {"T", run.target.T}}},
              {"final_dist_maxw", last.dist_maxw},
              {"momentum_drift",
               std::hypot(last.momentum[0] - run.records.front().momentum[0],
                          last.momentum[1] - run.records.front().momentum[1],
                          last.momentum[2] - run.records.front().momentum[2])},
              {"pass", run.h_monotone}};
    log << "relax: t_end=" << format_double(last.t) << " dist_maxw=" << format_double(last.dist_maxw)
        << " h_monotone=" << (run.h_monotone ? "true" : "false") << '\n';
  } catch (const Error& e) {
    report = {{"error", e.what()}, {"pass", false}};
    log << "relax: " << e.what() << '\n';
  }
  write_json(out / "relax.json", report);
  return report["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
}

int vpl(const ScenarioConfig& cfg, const fs::path& out, std::ostream& log) {
  if (cfg.B0 != Vec3{0.0, 0.0, 0.0}) throw ConfigError("vpl: the dynamic mode requires B0 = 0");
  const VelocityGrid vg = make_velocity_grid(cfg.L, cfg.N);
  const TorusGrid tg(cfg.M);
  const std::string initial = cfg.initial.empty() ? "perturbed" : cfg.initial;
  if (initial != "perturbed" && initial != "maxwellian") throw ConfigError("vpl: initial must be perturbed or maxwellian");
  const std::vector<double> m = sample_maxwellian(vg, initial_maxwellian(cfg));
  DistField f0(tg, vg);
  for (std::size_t x = 0; x < tg.size(); ++x) {
    const double factor =
        initial == "perturbed" ? 1.0 + cfg.amplitude * std::cos(2.0 * std::numbers::pi * tg.position(x)[0]) : 1.0;
    auto s = f0.slice(x);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = factor * m[i];
  }

  nlohmann::json report;
  try {
    // The background neutralises the discrete initial charge exactly.
    const VplState state = make_vpl_state(f0, total_mass(f0));
    const VplRun run = run_vpl(state, cfg.nu, cfg.dt, cfg.t_end, cfg.record_every);
    std::ofstream csv(out / "diagnostics.csv");
    write_diagnostics_csv(csv, run.records);
    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof name, "E_%04zu.csv", k);
      write_csv((out / name).string(), run.snapshots[k]);
    }
    const DiagnosticsRecord& last = run.records.back();
    report = {{"initial", initial},
              {"rho_ion", state.rho_ion},
              {"records", run.records.size()},
              {"max_halvings", run.max_halvings},
              {"final_supE", last.supE},
              {"final_dist_maxw", last.dist_maxw},
              {"pass", true}};
    log << "vpl: t_end=" << format_double(last.t) << " supE=" << format_double(last.supE)
        << " dist_maxw=" << format_double(last.dist_maxw) << '\n';
  } catch (const Error& e) {
    report = {{"error", e.what()}, {"pass", false}};
    log << "vpl: " << e.what() << '\n';
  }
  write_json(out / "vpl.json", report);
  return report["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
}

int check(const ScenarioConfig& cfg, const fs::path& out, std::ostream& log) {
  const Candidate c = load_candidate(cfg);
  nlohmann::json report;
  try {
    report = steady_state_report(c.f, c.E, c.B, cfg.nu, cfg.rho_ion, cfg.steady);
  } catch (const Error& e) {
    report = {{"error", e.what()}, {"pass", false}};
  }
  write_json(out / "steady_state.json", report);
  const bool pass = report["pass"].get<bool>();
  log << "check: " << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitPass : kExitCheckFailed;
}

int pipeline(const ScenarioConfig& cfg, const fs::path& out, std::ostream& log) {
  const Candidate c = load_candidate(cfg);
  nlohmann::json report;
  try {
    const SevenStepReport r = proof_pipeline(c.f, c.E, c.B, cfg.nu, cfg.rho_ion, cfg.pipeline);
    report = r;
    log << "pipeline: " << r.verdict() << '\n';
  } catch (const Error& e) {
    report = {{"error", e.what()}, {"pass", false}, {"verdict", "error"}};
    log << "pipeline: " << e.what() << '\n';
  }
  write_json(out / "pipeline.json", report);
  return report["pass"].get<bool>() ? kExitPass : kExitCheckFailed;
}

int nonvacuous_cmd(const ScenarioConfig& cfg, const fs::path& out, std::ostream& log) {
  NonvacuousSetup setup;
  setup.L = cfg.L;
  setup.N = cfg.N;
  setup.M = cfg.M;
  setup.nu = cfg.nu;
  setup.hypotheses = cfg.hypotheses;
  setup.hypotheses.steady = cfg.steady;
  setup.pipeline = cfg.pipeline;
  nlohmann::json report;
  try {
    report = nonvacuous(cfg.rho_ion, cfg.T_ref, cfg.B0, setup);
  } catch (const Error& e) {
    report = {{"error", e.what()}, {"pass", false}};
  }
  write_json(out / "nonvacuous.json", report);
  const bool pass = report["pass"].get<bool>();
  log << "nonvacuous: " << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitPass : kExitCheckFailed;
}

int bench(const ScenarioConfig& cfg, const fs::path& out, std::ostream& log) {
  const VelocityGrid vg = make_velocity_grid(cfg.L, cfg.bench_N);
  const std::vector<double> f = bi_maxwellian(vg, {1.0, 0.0, 0.0}, cfg.T_ref);
  double best = 0.0;
  double checksum = 0.0;
  for (int r = 0; r < cfg.bench_repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const CollisionOutput q = collision_Q(vg, f);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checksum = q.Q[vg.size() / 2];
    if (r == 0 || s < best) best = s;
  }
  const double pairs = collision_pair_count(vg);
  const double rate = pairs / best;
  const nlohmann::json report = {{"N", cfg.bench_N},       {"threads", omp_get_max_threads()},
                                 {"pairs", pairs},         {"seconds", best},
                                 {"pairs_per_second", rate}, {"repeats", cfg.bench_repeats},
                                 {"checksum", checksum}};
  write_json(out / "bench.json", report);
  log << "bench: N=" << cfg.bench_N << " threads=" << omp_get_max_threads() << " pairs/s=" << format_double(rate)
      << '\n';
  return kExitPass;
}

}  // namespace

int run_subcommand(const std::string& name, const ScenarioConfig& cfg, std::ostream& log) {
  using Runner = int (*)(const ScenarioConfig&, const fs::path&, std::ostream&);
  Runner runner = nullptr;
  if (name == "relax") runner = relax;
  else if (name == "vpl") runner = vpl;
  else if (name == "check") runner = check;
  else if (name == "pipeline") runner = pipeline;
  else if (name == "nonvacuous") runner = nonvacuous_cmd;
  else if (name == "bench") runner = bench;
  if (runner == nullptr) {
    log << "unknown subcommand '" << name << "' (expected relax, vpl, check, pipeline, nonvacuous, bench)\n";
    return kExitUsage;
  }
  try {
    const fs::path out(cfg.out);
    fs::create_directories(out);
    return runner(cfg, out, log);
  } catch (const Error& e) {
    log << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    log << name << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace vmlk
