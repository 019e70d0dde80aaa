#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "vmlk/grid.hpp"

namespace vmlk {

/// Isotropic Maxwellian rho (2 pi T)^{-3/2} exp(-|v-u|^2 / 2T).
struct MaxwellianParams {
  double rho = 1.0;
  Vec3 u{0.0, 0.0, 0.0};
  double T = 1.0;
};

/// Coefficients of log f = a + b.v + c|v|^2; c < 0 for an integrable state.
struct LogQuadParams {
  double a = 0.0;
  Vec3 b{0.0, 0.0, 0.0};
  double c = -0.5;
};

/// The spatially uniform, zero-drift equilibrium. Requires rho_ion > 0, T > 0.
double equilibrium_maxwellian(double rho_ion, double T, const Vec3& v);

double maxwellian(const MaxwellianParams& p, const Vec3& v);
double local_maxwellian(const LogQuadParams& p, const Vec3& v);

/// u = -b/(2c), T = -1/(2c); rho follows from a.
LogQuadParams to_log_quad(const MaxwellianParams& p);
MaxwellianParams from_log_quad(const LogQuadParams& p);

/// Samples of a Maxwellian at every node of the grid.
std::vector<double> sample_maxwellian(const VelocityGrid& grid, const MaxwellianParams& p);

/// Hydrodynamic moments by midpoint quadrature: rho, bulk velocity u and
/// scalar temperature T = int |v-u|^2 f / (3 rho).
/// Throws DegenerateDensityError when rho is not above kDegenerateDensity.
MaxwellianParams moments(const VelocityGrid& grid, std::span<const double> f);

inline constexpr double kDegenerateDensity = 1e-12;

/// Parses `rho=1, u=0.5,0,0, T=0.8` (keys in any order, all three required).
MaxwellianParams parse_maxwellian_params(std::string_view text);

void validate(const MaxwellianParams& p);

}  // namespace vmlk
