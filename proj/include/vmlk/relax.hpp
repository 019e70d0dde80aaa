#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "vmlk/dist_field.hpp"
#include "vmlk/fields.hpp"
#include "vmlk/grid.hpp"
#include "vmlk/maxwell_eq.hpp"

namespace vmlk {

struct DiagnosticsRecord {
  double t = 0.0;
  double H = 0.0;
  double D = 0.0;
  double mass = 0.0;
  Vec3 momentum{0.0, 0.0, 0.0};
  /// Kinetic 1/2 int |v|^2 f plus, for Vlasov-Poisson runs, 1/2 int |E|^2.
  double energy = 0.0;
  double supE = 0.0;
  /// sup |f - M| / sup M against the moment-matched Maxwellian of the initial data.
  double dist_maxw = 0.0;
};

/// Header `t,H,D,mass,p1,p2,p3,energy,supE,dist_maxw`, 17 significant digits.
void write_diagnostics_csv(std::ostream& os, std::span<const DiagnosticsRecord> records);

inline constexpr int kMaxHalvings = 10;

/// One RK2 midpoint step of df/dt = nu Q(f, f). Throws StepRejected carrying
/// dt when any stage or the result has a non-positive value; nothing is clamped.
std::vector<double> step_homogeneous(const VelocityGrid& grid, std::span<const double> f, double dt, double nu);

/// Advances f by dt, splitting a rejected step into halves (then quarters,
/// ...) up to kMaxHalvings levels. `halvings` receives the deepest level used.
std::vector<double> step_homogeneous_adaptive(const VelocityGrid& grid, std::span<const double> f, double dt,
                                              double nu, int* halvings = nullptr);

struct HomogeneousRun {
  std::vector<DiagnosticsRecord> records;
  std::vector<double> f;
  MaxwellianParams target;
  /// H(t_{k+1}) <= H(t_k) + 1e-10 across every recorded pair.
  bool h_monotone = true;
  int max_halvings = 0;
};

inline constexpr double kEntropySlack = 1e-10;

/// Integrates to t_end in steps of dt (the last one shortened if needed),
/// recording diagnostics at t = 0, every `record_every` steps and at t_end.
HomogeneousRun run_homogeneous(const VelocityGrid& grid, std::span<const double> f0, double nu, double dt,
                               double t_end, int record_every = 1);

DiagnosticsRecord homogeneous_diagnostics(const VelocityGrid& grid, std::span<const double> f, double t,
                                          const std::vector<double>& target);

struct VplState {
  DistField f;
  VecField E;
  /// Static; must be zero for the dynamic mode.
  VecField B;
  double t = 0.0;
  double rho_ion = 1.0;
};

struct VplOptions {
  /// Keep E at its initial value instead of re-solving Gauss's law.
  bool freeze_field = false;
  double neutrality_tol = kNeutralityTolerance;
};

/// Builds a state with E = solve_gauss(density(f), rho_ion) and B = 0.
VplState make_vpl_state(const DistField& f, double rho_ion, double neutrality_tol = kNeutralityTolerance);

/// f(x, v) <- f(x, v - E(x) dt), per-axis cubic Lagrange sweeps on log f, so
/// Maxwellians are shifted exactly and positive data stay positive. Each
/// velocity line is rescaled to its previous sum, which conserves mass.
/// Departure points outside the velocity box give 0.
void velocity_kick(DistField& f, const VecField& E, double dt);

/// Strang step: free stream dt/2, E from Gauss, velocity kick dt, collisions dt
/// per torus node, free stream dt/2, E from Gauss. Throws StepRejected on
/// positivity loss and PreconditionError when B is not identically zero.
VplState step_vpl(const VplState& state, double dt, double nu, const VplOptions& opt = {});

struct VplRun {
  std::vector<DiagnosticsRecord> records;
  VplState final_state;
  MaxwellianParams target;
  int max_halvings = 0;
  /// Snapshots of E at every recorded time, for field dumps.
  std::vector<VecField> snapshots;
};

DiagnosticsRecord vpl_diagnostics(const VplState& s, const std::vector<double>& target);

VplRun run_vpl(const VplState& initial, double nu, double dt, double t_end, int record_every = 1,
               const VplOptions& opt = {});

/// Relative sup distance sup |f - g| / sup |g|.
double relative_sup_distance(std::span<const double> f, std::span<const double> g);

/// x-average of a DistField as one velocity slice.
std::vector<double> x_average(const DistField& f);

}  // namespace vmlk
