#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond the grid geometry.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "vmlk/grid.hpp"

namespace oracle {

using vmlk::Vec3;

inline Vec3 node_velocity(const vmlk::VelocityGrid& g, std::size_t idx) {
  const int n = g.points_per_axis();
  const int i3 = static_cast<int>(idx % n);
  const int i2 = static_cast<int>((idx / n) % n);
  const int i1 = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
  const double h = 2.0 * g.half_width() / n;
  return {-g.half_width() + (i1 + 0.5) * h, -g.half_width() + (i2 + 0.5) * h, -g.half_width() + (i3 + 0.5) * h};
}

inline double gaussian(double rho, const Vec3& u, double T, const Vec3& v) {
  const double d2 = (v[0] - u[0]) * (v[0] - u[0]) + (v[1] - u[1]) * (v[1] - u[1]) + (v[2] - u[2]) * (v[2] - u[2]);
  return rho * std::pow(2.0 * std::numbers::pi * T, -1.5) * std::exp(-d2 / (2.0 * T));
}

// d/dv_axis of samples, with the three-point one-sided stencils on the
// outer layers, written per axis line.
inline std::array<std::vector<double>, 3> fd_gradient(const vmlk::VelocityGrid& g, const std::vector<double>& s) {
  const int n = g.points_per_axis();
  const double h = 2.0 * g.half_width() / n;
  std::array<std::vector<double>, 3> out;
  for (int a = 0; a < 3; ++a) out[a].assign(s.size(), 0.0);
  auto at = [&](int i1, int i2, int i3) { return s[(static_cast<std::size_t>(i1) * n + i2) * n + i3]; };
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const std::size_t idx = (static_cast<std::size_t>(i1) * n + i2) * n + i3;
        std::array<int, 3> id{i1, i2, i3};
        for (int a = 0; a < 3; ++a) {
          auto val = [&](int shift) {
            std::array<int, 3> j = id;
            j[a] += shift;
            return at(j[0], j[1], j[2]);
          };
          double d;
          if (id[a] == 0)
            d = (-3.0 * val(0) + 4.0 * val(1) - val(2)) / (2.0 * h);
          else if (id[a] == n - 1)
            d = (3.0 * val(0) - 4.0 * val(-1) + val(-2)) / (2.0 * h);
          else
            d = (val(1) - val(-1)) / (2.0 * h);
          out[a][idx] = d;
        }
      }
  return out;
}

inline Eigen::Matrix3d landau_A(const Vec3& z) {
  const Eigen::Vector3d zz(z[0], z[1], z[2]);
  const double r = zz.norm();
  return (r * r * Eigen::Matrix3d::Identity() - zz * zz.transpose()) / (r * r * r);
}

struct Collision {
  std::vector<double> Q;
  std::array<std::vector<double>, 3> F;
};

// Brute-force flux with explicit 3x3 matrices, followed by the no-flux
// central divergence.
inline Collision collision(const vmlk::VelocityGrid& g, const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<double> logf(n);
  for (std::size_t i = 0; i < n; ++i) logf[i] = std::log(f[i]);
  const auto s = fd_gradient(g, logf);
  const double h = 2.0 * g.half_width() / g.points_per_axis();
  const double w = h * h * h;
  Collision c;
  for (auto& a : c.F) a.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 vi = node_velocity(g, i);
    const Eigen::Vector3d gi(f[i] * s[0][i], f[i] * s[1][i], f[i] * s[2][i]);
    Eigen::Vector3d acc = Eigen::Vector3d::Zero();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Vec3 vj = node_velocity(g, j);
      const Eigen::Vector3d gj(f[j] * s[0][j], f[j] * s[1][j], f[j] * s[2][j]);
      acc += landau_A({vi[0] - vj[0], vi[1] - vj[1], vi[2] - vj[2]}) * (f[j] * gi - f[i] * gj);
    }
    for (int a = 0; a < 3; ++a) c.F[a][i] = w * acc[a];
  }
  const int np = g.points_per_axis();
  c.Q.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const int ia[3] = {static_cast<int>(i / (np * np)), static_cast<int>((i / np) % np), static_cast<int>(i % np)};
    const std::size_t stride[3] = {static_cast<std::size_t>(np * np), static_cast<std::size_t>(np), 1};
    double q = 0.0;
    for (int a = 0; a < 3; ++a) {
      if (ia[a] + 1 <= np - 2) q += c.F[a][i + stride[a]];
      if (ia[a] - 1 >= 1) q -= c.F[a][i - stride[a]];
    }
    c.Q[i] = q / (2.0 * h);
  }
  return c;
}

// -1/2 w^2 sum_{i != j} f_i f_j xi^T A xi with explicit matrices.
inline double dissipation(const vmlk::VelocityGrid& g, const std::vector<double>& f) {
  const std::size_t n = f.size();
  std::vector<double> logf(n);
  for (std::size_t i = 0; i < n; ++i) logf[i] = std::log(f[i]);
  const auto s = fd_gradient(g, logf);
  const double h = 2.0 * g.half_width() / g.points_per_axis();
  const double w = h * h * h;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec3 vi = node_velocity(g, i), vj = node_velocity(g, j);
      const Eigen::Vector3d xi(s[0][i] - s[0][j], s[1][i] - s[1][j], s[2][i] - s[2][j]);
      sum += f[i] * f[j] * xi.dot(landau_A({vi[0] - vj[0], vi[1] - vj[1], vi[2] - vj[2]}) * xi);
    }
  return -0.5 * w * w * sum;
}

// sqrt(f)-weighted Householder QR least squares of log f on {1, v, |v|^2}.
// Returns (a, b1, b2, b3, c, residual).
inline std::array<double, 6> log_quadratic_fit(const vmlk::VelocityGrid& g, const std::vector<double>& f) {
  const std::size_t n = f.size();
  Eigen::MatrixXd A(n, 5);
  Eigen::VectorXd y(n);
  double wsum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 v = node_velocity(g, i);
    const double sw = std::sqrt(f[i]);
    A.row(i) << sw, sw * v[0], sw * v[1], sw * v[2], sw * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    y[i] = sw * std::log(f[i]);
    wsum += f[i];
  }
  const Eigen::VectorXd theta = A.householderQr().solve(y);
  const double res = std::sqrt((A * theta - y).squaredNorm() / wsum);
  return {theta[0], theta[1], theta[2], theta[3], theta[4], res};
}

}  // namespace oracle
