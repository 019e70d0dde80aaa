#include "vmlk/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vmlk/spectral.hpp"

namespace vmlk {

VelocityGrid make_velocity_grid(double half_width, int points_per_axis) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw PreconditionError("velocity grid: half width L must be positive, got " + std::to_string(half_width));
  if (points_per_axis < 4 || points_per_axis % 2 != 0)
    throw PreconditionError("velocity grid: N must be even >= 4, got " + std::to_string(points_per_axis));

  VelocityGrid g;
  g.half_width_ = half_width;
  g.n_ = points_per_axis;
  g.h_ = 2.0 * half_width / points_per_axis;
  const std::size_t total = g.size();
  for (auto& c : g.coords_) c.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Vec3 v = g.velocity(idx);
    for (int a = 0; a < 3; ++a) g.coords_[a][idx] = v[a];
  }
  return g;
}

std::array<int, 3> VelocityGrid::axis_indices(std::size_t idx) const {
  const auto n = static_cast<std::size_t>(n_);
  return {static_cast<int>(idx / (n * n)), static_cast<int>((idx / n) % n), static_cast<int>(idx % n)};
}

Vec3 VelocityGrid::velocity(std::size_t idx) const {
  const auto [i1, i2, i3] = axis_indices(idx);
  return {node(i1), node(i2), node(i3)};
}

std::size_t VelocityGrid::reflect(std::size_t idx) const {
  const auto [i1, i2, i3] = axis_indices(idx);
  return index(n_ - 1 - i1, n_ - 1 - i2, n_ - 1 - i3);
}

double integrate_v(const VelocityGrid& grid, std::span<const double> samples) {
  if (samples.size() != grid.size()) throw GridMismatchError("integrate_v: sample count does not match grid");
  double sum = 0.0;
  for (double s : samples) sum += s;
  return grid.weight() * sum;
}

std::array<std::vector<double>, 3> grad_v(const VelocityGrid& grid, std::span<const double> g) {
  if (g.size() != grid.size()) throw GridMismatchError("grad_v: sample count does not match grid");
  const int n = grid.points_per_axis();
  const double inv2h = 1.0 / (2.0 * grid.spacing());
  std::array<std::vector<double>, 3> out;
  for (int a = 0; a < 3; ++a) {
    out[a].assign(grid.size(), 0.0);
    const std::size_t s = grid.stride(a);
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
      const int i = grid.axis_indices(idx)[a];
      double d;
      if (i == 0) {
        d = -3.0 * g[idx] + 4.0 * g[idx + s] - g[idx + 2 * s];
      } else if (i == n - 1) {
        d = 3.0 * g[idx] - 4.0 * g[idx - s] + g[idx - 2 * s];
      } else {
        d = g[idx + s] - g[idx - s];
      }
      out[a][idx] = d * inv2h;
    }
  }
  return out;
}

std::array<std::vector<double>, 3> log_gradient(const VelocityGrid& grid, std::span<const double> f) {
  std::vector<double> logf(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f[i] > 0.0)) throw PreconditionError("log_gradient: f must be positive at every node");
    logf[i] = std::log(f[i]);
  }
  return grad_v(grid, logf);
}

TorusGrid::TorusGrid(int points_per_axis) : m_(points_per_axis) {
  if (points_per_axis < 1) throw PreconditionError("torus grid: M must be >= 1");
}

std::array<int, 3> TorusGrid::axis_indices(std::size_t idx) const {
  const auto m = static_cast<std::size_t>(m_);
  return {static_cast<int>(idx / (m * m)), static_cast<int>((idx / m) % m), static_cast<int>(idx % m)};
}

Vec3 TorusGrid::position(std::size_t idx) const {
  const auto [j1, j2, j3] = axis_indices(idx);
  return {node(j1), node(j2), node(j3)};
}

VecField::VecField(const TorusGrid& g, const Vec3& fill) : grid(g) {
  for (int a = 0; a < 3; ++a) components[a].assign(g.size(), fill[a]);
}

ScalarField VecField::component(int axis) const {
  ScalarField s(grid);
  s.values = components[axis];
  return s;
}

ScalarField torus_partial(const ScalarField& s, int axis) {
  if (axis < 0 || axis > 2) throw PreconditionError("torus_partial: axis must be 0, 1 or 2");
  const TorusGrid& tg = s.grid;
  TorusTransform t(tg, 1);
  std::vector<Complex> modes(tg.size());
  t.forward(s.values, modes);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t idx = 0; idx < tg.size(); ++idx) {
    const int k = tg.derivative_wavenumber(tg.axis_indices(idx)[axis]);
    modes[idx] *= Complex(0.0, two_pi * k);
  }
  ScalarField out(tg);
  t.inverse(modes, out.values);
  return out;
}

// Summed as offsets from the first sample, so a constant field returns its
// value exactly.
double torus_mean(const ScalarField& s) {
  if (s.values.empty()) return 0.0;
  const double ref = s.values.front();
  double sum = 0.0;
  for (double x : s.values) sum += x - ref;
  return ref + sum / static_cast<double>(s.values.size());
}

Vec3 torus_mean(const VecField& v) {
  return {torus_mean(v.component(0)), torus_mean(v.component(1)), torus_mean(v.component(2))};
}

double sup_norm(const ScalarField& s) {
  double m = 0.0;
  for (double x : s.values) m = std::max(m, std::abs(x));
  return m;
}

double sup_norm(const VecField& v) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.grid.size(); ++i) {
    const Vec3 x = v.at(i);
    m = std::max(m, std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
  }
  return m;
}

double l2_norm(const ScalarField& s) {
  double sum = 0.0;
  for (double x : s.values) sum += x * x;
  return std::sqrt(sum / static_cast<double>(s.values.size()));
}

double l2_norm(const VecField& v) {
  double sum = 0.0;
  for (int a = 0; a < 3; ++a)
    for (double x : v.components[a]) sum += x * x;
  return std::sqrt(sum / static_cast<double>(v.grid.size()));
}

}  // namespace vmlk
