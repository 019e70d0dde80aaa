// Acceptance gate: one PASS / FAIL / UNVERIFIABLE line per criterion.
// Exit status is 1 when any criterion fails; UNVERIFIABLE does not count.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "vmlk/dist_field.hpp"
#include "vmlk/fields.hpp"
#include "vmlk/fixtures.hpp"
#include "vmlk/landau.hpp"
#include "vmlk/maxwell_eq.hpp"
#include "vmlk/relax.hpp"
#include "vmlk/verify.hpp"
#include "vmlk/vlasov.hpp"

using namespace vmlk;
using std::numbers::pi;

namespace {

enum class Status { Pass, Fail, Unverifiable };

struct Outcome {
  Status status;
  std::string detail;
};

struct Checks {
  bool ok = true;
  std::ostringstream text;

  void require(bool cond, const std::string& what) {
    if (!text.str().empty()) text << "; ";
    text << what << (cond ? "" : " [FAILED]");
    ok = ok && cond;
  }
  Outcome outcome() const { return {ok ? Status::Pass : Status::Fail, text.str()}; }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double sup_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Outcome nonvacuousness() {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = nonvacuous(1.0, 1.0, {0.0, 0.0, 2.0});
  const double secs = seconds_since(t0);
  const auto& s = r.hypotheses.steady;
  c.require(r.pass, "all checks pass");
  c.require(r.hypotheses.pass, "hypotheses 1-12");
  c.require(r.pipeline.pass, "pipeline " + r.pipeline.verdict());
  c.require(s.ampere.sup <= 1e-6, "ampere_sup " + fmt(s.ampere.sup));
  c.require(s.gauss.sup <= 1e-6, "gauss_sup " + fmt(s.gauss.sup));
  c.require(s.divb.sup <= 1e-6, "divb_sup " + fmt(s.divb.sup));
  c.require(s.vlasov.sup <= 1e-3, "vlasov_sup " + fmt(s.vlasov.sup));
  c.require(secs <= 120.0, "runtime " + fmt(secs) + " s");
  return c.outcome();
}

Outcome h_theorem() {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g = make_velocity_grid(6.0, 12);
  double worst = -1e300;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto d = dissipation_terms(g, random_band_limited(g, seed));
    worst = std::max(worst, d.value / d.scale);
  }
  c.require(worst <= 1e-12, "max D/scale over 50 seeds " + fmt(worst));
  const double dref = dissipation(g, bi_maxwellian(g));
  const double dm = dissipation(g, sample_maxwellian(g, {}));
  c.require(std::abs(dm) <= 1e-12 * std::abs(dref), "|D(M)|/|D(bimodal)| " + fmt(std::abs(dm) / std::abs(dref)));
  const double secs = seconds_since(t0);
  c.require(secs <= 300.0, "runtime " + fmt(secs) + " s");
  return c.outcome();
}

Outcome fixed_point_and_relaxation() {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto g16 = make_velocity_grid(6.0, 16);
  const auto m = sample_maxwellian(g16, {});
  const double dt0 = 1e-2;
  const double move = sup_diff(step_homogeneous(g16, m, dt0, 1.0), m);
  c.require(move <= dt0 * 1e-3 * sup_abs(m), "one-step move / (dt max M) " + fmt(move / (dt0 * sup_abs(m))));

  const auto run16 = run_homogeneous(g16, bi_maxwellian(g16), 1.0, 1e-2, 5.0, 10);
  const double d16 = run16.records.back().dist_maxw;
  const double secs16 = seconds_since(t0);
  c.require(d16 <= 0.05, "N=16 distance at t=5 " + fmt(d16));
  c.require(run16.h_monotone, std::string("H nonincreasing ") + (run16.h_monotone ? "yes" : "no"));

  const auto g24 = make_velocity_grid(6.0, 24);
  const auto run24 = run_homogeneous(g24, bi_maxwellian(g24), 1.0, 5e-2, 5.0, 10);
  const double d24 = run24.records.back().dist_maxw;
  const auto l16 = moments(g16, run16.f), l24 = moments(g24, run24.f);
  const double drho = std::abs(l16.rho - l24.rho) / l24.rho;
  const double dT = std::abs(l16.T - l24.T) / l24.T;
  c.require(drho <= 0.02 && dT <= 0.02, "limit vs N=24: rho " + fmt(drho) + ", T " + fmt(dT));
  c.require(std::abs(d16 - d24) <= 0.02, "distance N=16 vs N=24 " + fmt(d16) + " vs " + fmt(d24));
  c.require(secs16 <= 1800.0, "N=16 runtime " + fmt(secs16) + " s");
  return c.outcome();
}

Outcome pipeline_soundness() {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  const TorusGrid t(8);
  int passed = 0;
  double worst = 0.0;
  for (double rho : {0.5, 1.0, 2.0})
    for (double T : {0.5, 1.0, 2.0}) {
      const auto g = make_velocity_grid(6.0 * std::sqrt(T), 16);
      const auto cand = equilibrium_candidate(t, g, rho, T, {0.0, 0.0, 2.0});
      const auto r = proof_pipeline(cand.f, cand.E, cand.B, cand.nu, cand.rho_ion);
      passed += r.pass;
      if (r.pass) worst = std::max(worst, std::abs(r.T_eq - T) / T);
    }
  c.require(passed == 9, std::to_string(passed) + "/9 lattice points pass");
  c.require(worst <= 1e-3, "max |T_eq - T|/T " + fmt(worst));

  const auto g = make_velocity_grid(6.0, 16);
  const std::pair<const char*, int> defects[] = {{"varying_T", 4}, {"drifting", 6}, {"nonharmonic_B", 7}};
  for (const auto& [name, step] : defects) {
    const auto cand = named_candidate(name, t, g, 1.0, 1.0, {0.0, 0.0, 1.0});
    const auto r = proof_pipeline(cand.f, cand.E, cand.B, cand.nu, cand.rho_ion);
    c.require(r.failed_step == step, std::string(name) + " " + r.verdict());
  }
  const double secs = seconds_since(t0);
  c.require(secs <= 600.0, "runtime " + fmt(secs) + " s");
  return c.outcome();
}

Outcome field_solver() {
  Checks c;
  const TorusGrid t(16);
  ScalarField rho(t);
  for (std::size_t x = 0; x < t.size(); ++x) rho.values[x] = 1.0 + 0.1 * std::cos(2 * pi * t.position(x)[0]);
  const auto s = solve_gauss(rho, 1.0);
  double e = 0.0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    const double expect = 0.1 / (2 * pi) * std::sin(2 * pi * t.position(x)[0]);
    e = std::max({e, std::abs(s.E.components[0][x] - expect), std::abs(s.E.components[1][x]),
                  std::abs(s.E.components[2][x])});
  }
  c.require(e <= 1e-10, "single-mode Gauss error " + fmt(e));

  // harmonic part B - grad lap^-1 div B + curl lap^-1 curl B of random fields
  const TorusGrid t8(8);
  double worst_mode = 0.0, worst_b0 = 0.0;
  bool all_constant = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto b = random_vec_field(t8, seed);
    const auto grad_part = solve_gauss(divergence(b), 0.0, 1e-12).E;
    const auto cb = curl(b);
    VecField w(t8);
    for (int a = 0; a < 3; ++a) {
      const auto phi = solve_gauss(cb.component(a), 0.0, 1e-12).potential;
      for (std::size_t x = 0; x < t8.size(); ++x) w.components[a][x] = -phi.values[x];
    }
    const auto cw = curl(w);
    VecField h(t8);
    for (int a = 0; a < 3; ++a)
      for (std::size_t x = 0; x < t8.size(); ++x)
        h.components[a][x] = b.components[a][x] - grad_part.components[a][x] + cw.components[a][x];
    const auto r = harmonic_constant_check(h, 1e-10);
    all_constant = all_constant && r.is_constant;
    worst_mode = std::max(worst_mode, r.max_mode);
    const Vec3 m = torus_mean(b);
    for (int a = 0; a < 3; ++a) worst_b0 = std::max(worst_b0, std::abs(r.B0[a] - m[a]));
  }
  c.require(all_constant, "20 projected fields certified constant");
  c.require(worst_mode <= 1e-10, "max nonzero mode " + fmt(worst_mode));
  c.require(worst_b0 <= 1e-10, "B0 error " + fmt(worst_b0));
  return c.outcome();
}

Outcome conservation_and_order() {
  Checks c;
  const auto g = make_velocity_grid(4.0, 10);
  double drift = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto f = random_band_limited(g, seed);
    const double m0 = integrate_v(g, f);
    drift = std::max(drift, std::abs(integrate_v(g, step_homogeneous(g, f, 1e-2, 1.0)) - m0) / m0);
  }
  {
    const TorusGrid t(4);
    const auto h = make_velocity_grid(6.0, 12);
    const auto m = sample_maxwellian(h, {});
    DistField f(t, h);
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t i = 0; i < h.size(); ++i) f.slice(x)[i] = m[i] * (1.0 + 0.05 * std::cos(2 * pi * t.position(x)[0]));
    const auto s0 = make_vpl_state(f, total_mass(f));
    const auto s1 = step_vpl(s0, 0.02, 1.0);
    drift = std::max(drift, std::abs(total_mass(s1.f) - total_mass(s0.f)) / total_mass(s0.f));
  }
  c.require(drift <= 1e-8, "per-step relative mass drift " + fmt(drift));

  const auto g8 = make_velocity_grid(6.0, 8);
  const auto f0 = bi_maxwellian(g8);
  auto advance = [&](double dt, int steps) {
    std::vector<double> f = f0;
    for (int k = 0; k < steps; ++k) f = step_homogeneous(g8, f, dt, 1.0);
    return f;
  };
  const auto ref = advance(0.1 / 32, 128);
  const double ratio = sup_diff(advance(0.1, 4), ref) / sup_diff(advance(0.05, 8), ref);
  c.require(ratio >= 3.5 && ratio <= 4.5, "RK2 defect ratio " + fmt(ratio));

  double res[2];
  int k = 0;
  for (int n : {12, 24}) {
    const auto h = make_velocity_grid(6.0, n);
    const auto r = conservation_residuals(h, collision_Q(h, bi_maxwellian(h)).Q);
    res[k++] = std::sqrt(r.momentum[0] * r.momentum[0] + r.momentum[1] * r.momentum[1] + r.momentum[2] * r.momentum[2]) +
               std::abs(r.energy);
  }
  const double shrink = res[0] / res[1];
  c.require(shrink >= 3.5, "collision residual N=12 -> 24 shrink " + fmt(shrink) + " (" + fmt(res[0]) + " -> " +
                               fmt(res[1]) + ")");
  return c.outcome();
}

template <class F>
auto with_threads(int n, F f) {
  omp_set_num_threads(n);
  return f();
}

Outcome determinism() {
  Checks c;
  const auto g = make_velocity_grid(6.0, 12);
  const auto f = random_band_limited(g, 11);
  auto collision = [&] { return collision_Q(g, f).Q; };
  auto diss = [&] { return dissipation(g, f); };
  auto relax_csv = [&] {
    const auto run = run_homogeneous(g, bi_maxwellian(g), 1.0, 0.05, 0.2, 1);
    std::ostringstream os;
    write_diagnostics_csv(os, run.records);
    return os.str();
  };
  auto vpl_csv = [&] {
    const TorusGrid t(4);
    const auto h = make_velocity_grid(6.0, 8);
    const auto m = sample_maxwellian(h, {});
    DistField d(t, h);
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t i = 0; i < h.size(); ++i) d.slice(x)[i] = m[i] * (1.0 + 0.05 * std::cos(2 * pi * t.position(x)[0]));
    const auto run = run_vpl(make_vpl_state(d, total_mass(d)), 1.0, 0.05, 0.2, 1);
    std::ostringstream os;
    write_diagnostics_csv(os, run.records);
    return os.str();
  };
  const bool same = with_threads(1, collision) == with_threads(4, collision) &&
                    with_threads(1, diss) == with_threads(4, diss) &&
                    with_threads(1, relax_csv) == with_threads(4, relax_csv) &&
                    with_threads(1, vpl_csv) == with_threads(4, vpl_csv);
  c.require(same, "bitwise identical at 1 and 4 threads");

  const auto gb = make_velocity_grid(6.0, 16);
  const auto fb = random_band_limited(gb, 1);
  omp_set_num_threads(1);
  double best = 1e300;
  for (int r = 0; r < 3; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto q = collision_Q(gb, fb);
    best = std::min(best, seconds_since(t0));
    if (q.Q.empty()) return {Status::Fail, "empty collision output"};
  }
  const double rate1 = collision_pair_count(gb) / best;
  c.require(rate1 >= 5e7, "single-thread pairs/s " + fmt(rate1));

  if (omp_get_num_procs() < 4) {
    const auto o = c.outcome();
    if (o.status == Status::Fail) return o;
    return {Status::Unverifiable, o.detail + "; 4-thread scaling needs >= 4 processors, " +
                                      std::to_string(omp_get_num_procs()) + " available"};
  }
  omp_set_num_threads(4);
  best = 1e300;
  for (int r = 0; r < 3; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto q = collision_Q(gb, fb);
    best = std::min(best, seconds_since(t0));
  }
  const double rate4 = collision_pair_count(gb) / best;
  c.require(rate4 >= 3.0 * rate1, "4-thread speedup " + fmt(rate4 / rate1));
  return c.outcome();
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"non-vacuousness", nonvacuousness},
      {"H-theorem", h_theorem},
      {"nullspace fixed point and relaxation", fixed_point_and_relaxation},
      {"pipeline soundness and sensitivity", pipeline_soundness},
      {"field solver exactness", field_solver},
      {"conservation and order", conservation_and_order},
      {"determinism and performance", determinism},
  };
  const int default_threads = omp_get_max_threads();
  bool failed = false;
  int id = 1;
  for (const auto& [name, run] : criteria) {
    omp_set_num_threads(default_threads);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "UNVERIFIABLE";
    failed = failed || o.status == Status::Fail;
    std::printf("%s criterion %d (%s, %.1f s): %s\n", tag, id++, name, seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
