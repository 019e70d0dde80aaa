#include "vmlk/relax.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "vmlk/field_io.hpp"
#include "vmlk/landau.hpp"

namespace vmlk {
namespace {

bool all_positive(std::span<const double> f) {
  for (double x : f)
    if (!(x > 0.0) || !std::isfinite(x)) return false;
  return true;
}

void require_step(double dt, double nu, const char* who) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError(std::string(who) + ": dt must be positive and finite");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw PreconditionError(std::string(who) + ": nu must be non-negative");
}

std::vector<double> adaptive(const VelocityGrid& grid, std::span<const double> f, double dt, double nu, int level,
                             int& deepest) {
  deepest = std::max(deepest, level);
  try {
    return step_homogeneous(grid, f, dt, nu);
  } catch (const StepRejected&) {
    if (level == kMaxHalvings) throw StepRejected("homogeneous step: positivity lost after 10 dt-halvings", dt);
    const std::vector<double> half = adaptive(grid, f, 0.5 * dt, nu, level + 1, deepest);
    return adaptive(grid, half, 0.5 * dt, nu, level + 1, deepest);
  }
}

VplState vpl_adaptive(const VplState& s, double dt, double nu, const VplOptions& opt, int level, int& deepest) {
  deepest = std::max(deepest, level);
  try {
    return step_vpl(s, dt, nu, opt);
  } catch (const StepRejected&) {
    if (level == kMaxHalvings) throw StepRejected("vpl step: positivity lost after 10 dt-halvings", dt);
    const VplState half = vpl_adaptive(s, 0.5 * dt, nu, opt, level + 1, deepest);
    return vpl_adaptive(half, 0.5 * dt, nu, opt, level + 1, deepest);
  }
}

double kinetic_energy(const VelocityGrid& grid, std::span<const double> f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v0 = grid.coords(0)[i], v1 = grid.coords(1)[i], v2 = grid.coords(2)[i];
    sum += (v0 * v0 + v1 * v1 + v2 * v2) * f[i];
  }
  return 0.5 * grid.weight() * sum;
}

Vec3 momentum_of(const VelocityGrid& grid, std::span<const double> f) {
  Vec3 p{0.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) sum += grid.coords(a)[i] * f[i];
    p[a] = grid.weight() * sum;
  }
  return p;
}

// Cubic Lagrange weights for nodes j0-1 .. j0+2 at fractional offset t from j0.
std::array<double, 4> cubic_weights(double t) {
  return {-t * (t - 1.0) * (t - 2.0) / 6.0, (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0,
          -(t + 1.0) * t * (t - 2.0) / 2.0, (t + 1.0) * t * (t - 1.0) / 6.0};
}

// Cubic Lagrange interpolation of log f at the departure points v - shift.
// The four-point stencil is moved inward at the box edges; a departure point
// outside [-L, L] gets 0 and the sweep returns false. Each line is rescaled to
// its previous sum, so the sweep conserves mass exactly.
bool shift_axis(const VelocityGrid& grid, std::span<double> f, int axis, double shift, std::vector<double>& line) {
  if (shift == 0.0) return true;
  bool inside = true;
  const int n = grid.points_per_axis();
  const double h = grid.spacing();
  const std::size_t stride = grid.stride(axis);
  line.resize(n);
  for (std::size_t start = 0; start < f.size(); ++start) {
    if (grid.axis_indices(start)[axis] != 0) continue;
    double before = 0.0, after = 0.0;
    for (int i = 0; i < n; ++i) {
      before += f[start + i * stride];
      line[i] = std::log(f[start + i * stride]);
    }
    for (int i = 0; i < n; ++i) {
      // departure point in node units
      const double p = i - shift / h;
      if (p < -0.5 || p > n - 0.5) {
        f[start + i * stride] = 0.0;
        inside = false;
        continue;
      }
      const int j = std::clamp(static_cast<int>(std::floor(p)) - 1, 0, n - 4);
      const auto w = cubic_weights(p - j - 1);
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += w[k] * line[j + k];
      f[start + i * stride] = std::exp(acc);
      after += f[start + i * stride];
    }
    const double scale = before / after;
    for (int i = 0; i < n; ++i) f[start + i * stride] *= scale;
  }
  return inside;
}

bool is_zero(const VecField& B) {
  for (const auto& c : B.components)
    for (double x : c)
      if (x != 0.0) return false;
  return true;
}

}  // namespace

void write_diagnostics_csv(std::ostream& os, std::span<const DiagnosticsRecord> records) {
  os << "t,H,D,mass,p1,p2,p3,energy,supE,dist_maxw\n";
  for (const auto& r : records) {
    os << format_double(r.t) << ',' << format_double(r.H) << ',' << format_double(r.D) << ','
       << format_double(r.mass) << ',' << format_double(r.momentum[0]) << ',' << format_double(r.momentum[1])
       << ',' << format_double(r.momentum[2]) << ',' << format_double(r.energy) << ',' << format_double(r.supE)
       << ',' << format_double(r.dist_maxw) << '\n';
  }
}

std::vector<double> step_homogeneous(const VelocityGrid& grid, std::span<const double> f, double dt, double nu) {
  require_step(dt, nu, "step_homogeneous");
  if (f.size() != grid.size()) throw GridMismatchError("step_homogeneous: sample count does not match grid");
  if (!all_positive(f)) throw PreconditionError("step_homogeneous: f must be positive at every node");
  const std::size_t n = f.size();
  if (nu == 0.0) return {f.begin(), f.end()};

  const std::vector<double> k1 = collision_Q(grid, f).Q;
  std::vector<double> mid(n);
  for (std::size_t i = 0; i < n; ++i) mid[i] = f[i] + 0.5 * dt * nu * k1[i];
  if (!all_positive(mid)) throw StepRejected("step_homogeneous: midpoint stage lost positivity", dt);

  const std::vector<double> k2 = collision_Q(grid, mid).Q;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f[i] + dt * nu * k2[i];
  if (!all_positive(out)) throw StepRejected("step_homogeneous: result lost positivity", dt);
  return out;
}

std::vector<double> step_homogeneous_adaptive(const VelocityGrid& grid, std::span<const double> f, double dt,
                                              double nu, int* halvings) {
  int deepest = 0;
  auto out = adaptive(grid, f, dt, nu, 0, deepest);
  if (halvings != nullptr) *halvings = deepest;
  return out;
}

double relative_sup_distance(std::span<const double> f, std::span<const double> g) {
  if (f.size() != g.size()) throw GridMismatchError("relative_sup_distance: size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num = std::max(num, std::abs(f[i] - g[i]));
    den = std::max(den, std::abs(g[i]));
  }
  if (!(den > 0.0)) throw PreconditionError("relative_sup_distance: reference is identically zero");
  return num / den;
}

DiagnosticsRecord homogeneous_diagnostics(const VelocityGrid& grid, std::span<const double> f, double t,
                                          const std::vector<double>& target) {
  DiagnosticsRecord r;
  r.t = t;
  r.H = entropy(grid, f);
  r.D = dissipation(grid, f);
  r.mass = integrate_v(grid, f);
  r.momentum = momentum_of(grid, f);
  r.energy = kinetic_energy(grid, f);
  r.dist_maxw = relative_sup_distance(f, target);
  return r;
}

HomogeneousRun run_homogeneous(const VelocityGrid& grid, std::span<const double> f0, double nu, double dt,
                               double t_end, int record_every) {
  require_step(dt, nu, "run_homogeneous");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw PreconditionError("run_homogeneous: t_end must be non-negative");
  if (record_every < 1) throw PreconditionError("run_homogeneous: record_every must be at least 1");
  if (!all_positive(f0)) throw PreconditionError("run_homogeneous: f0 must be positive at every node");

  HomogeneousRun run;
  run.target = moments(grid, f0);
  const std::vector<double> target = sample_maxwellian(grid, run.target);
  run.f.assign(f0.begin(), f0.end());
  run.records.push_back(homogeneous_diagnostics(grid, run.f, 0.0, target));

  double t = 0.0;
  long step = 0;
  const double eps = 1e-12 * std::max(1.0, t_end);
  while (t < t_end - eps) {
    const double h = std::min(dt, t_end - t);
    int deepest = 0;
    run.f = step_homogeneous_adaptive(grid, run.f, h, nu, &deepest);
    run.max_halvings = std::max(run.max_halvings, deepest);
    ++step;
    t = (t_end - t - h <= eps) ? t_end : t + h;
    if (step % record_every == 0 || t == t_end) run.records.push_back(homogeneous_diagnostics(grid, run.f, t, target));
  }
  for (std::size_t k = 1; k < run.records.size(); ++k)
    if (run.records[k].H > run.records[k - 1].H + kEntropySlack) run.h_monotone = false;
  return run;
}

std::vector<double> x_average(const DistField& f) {
  std::vector<double> avg(f.velocity().size(), 0.0);
  for (std::size_t x = 0; x < f.torus().size(); ++x) {
    const auto s = f.slice(x);
    for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += s[i];
  }
  const double inv = 1.0 / static_cast<double>(f.torus().size());
  for (double& a : avg) a *= inv;
  return avg;
}

VplState make_vpl_state(const DistField& f, double rho_ion, double neutrality_tol) {
  VplState s{f, VecField(f.torus()), VecField(f.torus()), 0.0, rho_ion};
  s.E = solve_gauss(density(f), rho_ion, neutrality_tol).E;
  return s;
}

void velocity_kick(DistField& f, const VecField& E, double dt) {
  if (!(E.grid == f.torus())) throw GridMismatchError("velocity_kick: E and f must share the torus grid");
  const VelocityGrid& vg = f.velocity();
#pragma omp parallel
  {
    std::vector<double> line;
#pragma omp for schedule(static)
    for (std::size_t x = 0; x < f.torus().size(); ++x) {
      const Vec3 e = E.at(x);
      for (int a = 0; a < 3; ++a)
        if (!shift_axis(vg, f.slice(x), a, e[a] * dt, line)) break;
    }
  }
}

VplState step_vpl(const VplState& state, double dt, double nu, const VplOptions& opt) {
  require_step(dt, nu, "step_vpl");
  if (!is_zero(state.B)) throw PreconditionError("step_vpl: the dynamic mode requires B = 0");
  if (!(state.f.min_value() > 0.0)) throw PreconditionError("step_vpl: f must be positive at every node");

  VplState s = state;
  free_stream(s.f, 0.5 * dt);
  if (!opt.freeze_field) s.E = solve_gauss(density(s.f), s.rho_ion, opt.neutrality_tol).E;
  velocity_kick(s.f, s.E, dt);
  if (!(s.f.min_value() > 0.0)) throw StepRejected("step_vpl: velocity kick lost positivity", dt);

  if (nu != 0.0) {
    const VelocityGrid& vg = s.f.velocity();
    const auto rep = slice_representatives(s.f);
    std::vector<std::vector<double>> stepped(rep.size());
    for (std::size_t x = 0; x < rep.size(); ++x)
      if (rep[x] == x) stepped[x] = step_homogeneous(vg, s.f.slice(x), dt, nu);
    for (std::size_t x = 0; x < rep.size(); ++x) std::ranges::copy(stepped[rep[x]], s.f.slice(x).begin());
  }

  free_stream(s.f, 0.5 * dt);
  if (!(s.f.min_value() > 0.0)) throw StepRejected("step_vpl: free streaming lost positivity", dt);
  if (!opt.freeze_field) s.E = solve_gauss(density(s.f), s.rho_ion, opt.neutrality_tol).E;
  s.t = state.t + dt;
  return s;
}

DiagnosticsRecord vpl_diagnostics(const VplState& s, const std::vector<double>& target) {
  const VelocityGrid& vg = s.f.velocity();
  const std::size_t nx = s.f.torus().size();
  const auto rep = slice_representatives(s.f);
  std::vector<double> d(nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x)
    if (rep[x] == x) d[x] = dissipation(vg, s.f.slice(x));

  DiagnosticsRecord r;
  r.t = s.t;
  double h = 0.0, dsum = 0.0, kin = 0.0;
  for (std::size_t x = 0; x < nx; ++x) {
    h += entropy(vg, s.f.slice(x));
    dsum += d[rep[x]];
    kin += kinetic_energy(vg, s.f.slice(x));
  }
  const double inv = 1.0 / static_cast<double>(nx);
  r.H = h * inv;
  r.D = dsum * inv;
  r.mass = total_mass(s.f);
  r.momentum = torus_mean(current(s.f));
  const double e2 = l2_norm(s.E);
  r.energy = kin * inv + 0.5 * e2 * e2;
  r.supE = sup_norm(s.E);
  r.dist_maxw = relative_sup_distance(x_average(s.f), target);
  return r;
}

VplRun run_vpl(const VplState& initial, double nu, double dt, double t_end, int record_every, const VplOptions& opt) {
  require_step(dt, nu, "run_vpl");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw PreconditionError("run_vpl: t_end must be non-negative");
  if (record_every < 1) throw PreconditionError("run_vpl: record_every must be at least 1");

  VplRun run{{}, initial, {}, 0, {}};
  const VelocityGrid& vg = initial.f.velocity();
  const std::vector<double> avg = x_average(initial.f);
  run.target = moments(vg, avg);
  const std::vector<double> target = sample_maxwellian(vg, run.target);
  run.records.push_back(vpl_diagnostics(run.final_state, target));
  run.snapshots.push_back(run.final_state.E);

  const double t0 = initial.t;
  const double eps = 1e-12 * std::max(1.0, t_end);
  double t = 0.0;
  long step = 0;
  while (t < t_end - eps) {
    const double h = std::min(dt, t_end - t);
    int deepest = 0;
    run.final_state = vpl_adaptive(run.final_state, h, nu, opt, 0, deepest);
    run.max_halvings = std::max(run.max_halvings, deepest);
    ++step;
    t = (t_end - t - h <= eps) ? t_end : t + h;
    run.final_state.t = t0 + t;
    if (step % record_every == 0 || t == t_end) {
      run.records.push_back(vpl_diagnostics(run.final_state, target));
      run.snapshots.push_back(run.final_state.E);
    }
  }
  return run;
}

}  // namespace vmlk
