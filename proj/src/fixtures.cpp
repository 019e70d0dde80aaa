#include "vmlk/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vmlk {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Mode {
  std::array<int, 3> k;
  double amp;
  double phase;
};

std::vector<Mode> random_modes(FixtureRng& rng, int kmax, bool symmetric) {
  std::vector<Mode> modes;
  const int lo = symmetric ? -kmax : 0;
  for (int a = lo; a <= kmax; ++a)
    for (int b = lo; b <= kmax; ++b)
      for (int c = lo; c <= kmax; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        modes.push_back({{a, b, c}, rng.uniform(-1.0, 1.0), rng.uniform(0.0, kTwoPi)});
      }
  return modes;
}

}  // namespace

std::vector<double> random_band_limited(const VelocityGrid& grid, std::uint64_t seed) {
  FixtureRng rng(seed);
  MaxwellianParams p;
  p.rho = rng.uniform(0.5, 2.0);
  for (double& u : p.u) u = rng.uniform(-0.5, 0.5);
  p.T = rng.uniform(0.5, 1.5);
  std::vector<Mode> modes = random_modes(rng, 2, false);
  double total = 0.0;
  for (const auto& m : modes) total += std::abs(m.amp);
  const double L = grid.half_width();
  std::vector<double> f = sample_maxwellian(grid, p);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Vec3 v = grid.velocity(i);
    double g = 0.0;
    for (const auto& m : modes)
      g += m.amp * std::cos(std::numbers::pi * (m.k[0] * v[0] + m.k[1] * v[1] + m.k[2] * v[2]) / L + m.phase);
    f[i] *= 1.0 + 0.5 * g / total;
  }
  return f;
}

std::vector<double> bi_maxwellian(const VelocityGrid& grid, const Vec3& u, double T) {
  const std::vector<double> a = sample_maxwellian(grid, {1.0, u, T});
  const std::vector<double> b = sample_maxwellian(grid, {1.0, {-u[0], -u[1], -u[2]}, T});
  std::vector<double> f(a.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 0.5 * (a[i] + b[i]);
  return f;
}

ScalarField random_scalar_field(const TorusGrid& grid, std::uint64_t seed, int kmax) {
  FixtureRng rng(seed);
  const std::vector<Mode> modes = random_modes(rng, kmax, true);
  ScalarField s(grid, rng.uniform(-1.0, 1.0));
  for (std::size_t x = 0; x < grid.size(); ++x) {
    const Vec3 p = grid.position(x);
    for (const auto& m : modes)
      s.values[x] += m.amp * std::cos(kTwoPi * (m.k[0] * p[0] + m.k[1] * p[1] + m.k[2] * p[2]) + m.phase);
  }
  return s;
}

VecField random_vec_field(const TorusGrid& grid, std::uint64_t seed, int kmax) {
  VecField v(grid);
  for (int a = 0; a < 3; ++a) v.components[a] = random_scalar_field(grid, seed * 3 + a, kmax).values;
  return v;
}

DistField uniform_in_x(const TorusGrid& torus, const VelocityGrid& velocity, const std::vector<double>& slice) {
  if (slice.size() != velocity.size()) throw GridMismatchError("uniform_in_x: slice does not match the velocity grid");
  DistField f(torus, velocity);
  for (std::size_t x = 0; x < torus.size(); ++x) std::ranges::copy(slice, f.slice(x).begin());
  return f;
}

Candidate equilibrium_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                                const Vec3& B0) {
  return {uniform_in_x(torus, velocity, sample_maxwellian(velocity, {rho_ion, {0.0, 0.0, 0.0}, T})), VecField(torus),
          VecField(torus, B0), 1.0, rho_ion};
}

Candidate varying_temperature_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                                        double amplitude) {
  Candidate c = equilibrium_candidate(torus, velocity, rho_ion, T, {0.0, 0.0, 0.0});
  const int m = torus.points_per_axis();
  for (int j = 0; j < m; ++j) {
    const double Tx = T * (1.0 + amplitude * std::sin(kTwoPi * torus.node(j)));
    const std::vector<double> s = sample_maxwellian(velocity, {rho_ion, {0.0, 0.0, 0.0}, Tx});
    for (int j2 = 0; j2 < m; ++j2)
      for (int j3 = 0; j3 < m; ++j3) std::ranges::copy(s, c.f.slice(torus.index(j, j2, j3)).begin());
  }
  return c;
}

Candidate drifting_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                             const Vec3& u) {
  return {uniform_in_x(torus, velocity, sample_maxwellian(velocity, {rho_ion, u, T})), VecField(torus),
          VecField(torus), 1.0, rho_ion};
}

Candidate nonharmonic_b_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                                  const Vec3& B0, double amplitude) {
  Candidate c = equilibrium_candidate(torus, velocity, rho_ion, T, B0);
  for (std::size_t x = 0; x < torus.size(); ++x)
    c.B.components[0][x] += amplitude * std::sin(kTwoPi * torus.position(x)[2]);
  return c;
}

Candidate named_candidate(const std::string& name, const TorusGrid& torus, const VelocityGrid& velocity,
                          double rho_ion, double T, const Vec3& B0) {
  if (name == "equilibrium") return equilibrium_candidate(torus, velocity, rho_ion, T, B0);
  if (name == "drifting") {
    Candidate c = drifting_candidate(torus, velocity, rho_ion, T);
    c.B = VecField(torus, B0);
    return c;
  }
  if (name == "varying_T") {
    Candidate c = varying_temperature_candidate(torus, velocity, rho_ion, T);
    c.B = VecField(torus, B0);
    return c;
  }
  if (name == "nonharmonic_B") return nonharmonic_b_candidate(torus, velocity, rho_ion, T, B0);
  throw PreconditionError("unknown candidate '" + name + "' (expected equilibrium, drifting, varying_T, nonharmonic_B)");
}

}  // namespace vmlk
