#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "vmlk/error.hpp"

namespace vmlk {

using Vec3 = std::array<double, 3>;

/// Truncated, cell-centered Cartesian grid on [-L, L]^3 in velocity space.
///
/// Nodes per axis sit at v_i = -L + (i + 1/2) h with h = 2L/N. N is even, so
/// the origin is never a node and the node set is closed under v -> -v.
/// Every node carries the midpoint weight h^3. Flat indices are row-major with
/// the first velocity axis slowest.
class VelocityGrid {
 public:
  double half_width() const { return half_width_; }
  int points_per_axis() const { return n_; }
  double spacing() const { return h_; }
  double weight() const { return h_ * h_ * h_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  /// Coordinate of node i along any axis.
  double node(int i) const { return -half_width_ + (i + 0.5) * h_; }

  std::size_t index(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * n_ + i2) * n_ + i3;
  }
  std::array<int, 3> axis_indices(std::size_t idx) const;
  Vec3 velocity(std::size_t idx) const;

  /// Flat index of the node at -v.
  std::size_t reflect(std::size_t idx) const;

  /// Per-node coordinate arrays (structure of arrays), one per axis.
  std::span<const double> coords(int axis) const { return coords_[axis]; }

  /// Flat-index stride of one step along `axis`.
  std::size_t stride(int axis) const {
    return axis == 0 ? static_cast<std::size_t>(n_) * n_ : axis == 1 ? static_cast<std::size_t>(n_) : 1;
  }

  friend VelocityGrid make_velocity_grid(double half_width, int points_per_axis);

 private:
  VelocityGrid() = default;

  double half_width_ = 0.0;
  int n_ = 0;
  double h_ = 0.0;
  std::array<std::vector<double>, 3> coords_;
};

/// Throws PreconditionError unless L > 0, N even and N >= 4.
VelocityGrid make_velocity_grid(double half_width, int points_per_axis);

/// Midpoint quadrature: h^3 times the sum of samples in ascending node order.
double integrate_v(const VelocityGrid& grid, std::span<const double> samples);

/// Second-order finite-difference gradient. Central differences in the
/// interior, one-sided three-point stencils on the two outer layers per axis.
/// Both stencils are exact on quadratics.
std::array<std::vector<double>, 3> grad_v(const VelocityGrid& grid, std::span<const double> samples);

/// grad_v(log f). Exact for (local) Maxwellians, whose logarithm is quadratic.
std::array<std::vector<double>, 3> log_gradient(const VelocityGrid& grid, std::span<const double> f);

/// Uniform periodic grid on the unit torus (R/Z)^3 with M points per axis.
/// Flat indices are row-major with x1 slowest.
class TorusGrid {
 public:
  TorusGrid() = default;
  explicit TorusGrid(int points_per_axis);

  int points_per_axis() const { return m_; }
  std::size_t size() const { return static_cast<std::size_t>(m_) * m_ * m_; }
  double node(int j) const { return static_cast<double>(j) / m_; }

  std::size_t index(int j1, int j2, int j3) const {
    return (static_cast<std::size_t>(wrap(j1)) * m_ + wrap(j2)) * m_ + wrap(j3);
  }
  std::array<int, 3> axis_indices(std::size_t idx) const;
  Vec3 position(std::size_t idx) const;

  /// Signed integer wavenumber of DFT bin j, in {-M/2+1, ..., M/2}.
  int wavenumber(int j) const { return j <= m_ / 2 ? j : j - m_; }
  /// Wavenumber used by derivatives: the Nyquist bin (even M) maps to zero.
  int derivative_wavenumber(int j) const {
    return (m_ % 2 == 0 && j == m_ / 2) ? 0 : wavenumber(j);
  }

  int wrap(int j) const { return ((j % m_) + m_) % m_; }

  bool operator==(const TorusGrid&) const = default;

 private:
  int m_ = 0;
};

/// Real scalar sampled on every torus node.
struct ScalarField {
  TorusGrid grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const TorusGrid& g, double fill = 0.0) : grid(g), values(g.size(), fill) {}
};

/// Three real components sampled on every torus node.
struct VecField {
  TorusGrid grid;
  std::array<std::vector<double>, 3> components;

  VecField() = default;
  explicit VecField(const TorusGrid& g, const Vec3& fill = {0.0, 0.0, 0.0});

  Vec3 at(std::size_t idx) const { return {components[0][idx], components[1][idx], components[2][idx]}; }
  ScalarField component(int axis) const;
};

/// Spectral partial derivative along `axis` (0, 1 or 2).
ScalarField torus_partial(const ScalarField& s, int axis);

/// Discrete mean over the torus nodes, equal to the integral over the unit torus.
double torus_mean(const ScalarField& s);
Vec3 torus_mean(const VecField& v);

double sup_norm(const ScalarField& s);
/// Pointwise Euclidean norm, maximised over nodes.
double sup_norm(const VecField& v);
/// sqrt of the torus mean of s^2 (resp. |v|^2).
double l2_norm(const ScalarField& s);
double l2_norm(const VecField& v);

}  // namespace vmlk
