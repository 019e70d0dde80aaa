#pragma once

#include "vmlk/grid.hpp"
#include "vmlk/spectral.hpp"

namespace vmlk {

ScalarField divergence(const VecField& v);
VecField curl(const VecField& v);
/// Spectral gradient of a scalar field.
VecField gradient(const ScalarField& s);

struct GaussSolveResult {
  VecField E;
  ScalarField potential;
  /// sup |div E - (rho - rho_ion)|
  double residual_div = 0.0;
  /// sup |curl E|
  double residual_curl = 0.0;
};

inline constexpr double kNeutralityTolerance = 1e-8;

/// Solves lap(phi) = -(rho - rho_ion) spectrally with zero-mean phi and returns
/// E = -grad(phi), the unique zero-mean curl-free field with div E = rho - rho_ion.
/// Throws NeutralityError when |mean(rho) - rho_ion| exceeds `neutrality_tol`.
GaussSolveResult solve_gauss(const ScalarField& rho, double rho_ion, double neutrality_tol = kNeutralityTolerance);

struct HarmonicReport {
  double curl_norm = 0.0;
  double div_norm = 0.0;
  /// Largest |B_k| over k != 0 (normalised Fourier coefficients).
  double max_mode = 0.0;
  /// Bound on every k != 0 mode implied by the curl and divergence norms.
  double mode_bound = 0.0;
  bool is_constant = false;
  Vec3 B0{0.0, 0.0, 0.0};
};

/// If sup|curl B| <= tol and sup|div B| <= tol, checks that every nonzero
/// Fourier mode obeys |B_k| <= sqrt(curl^2 + div^2) / (2 pi |k|) and reports
/// B0 = mean(B). On a flat torus curl- and divergence-free fields are constant.
HarmonicReport harmonic_constant_check(const VecField& B, double tol);

/// Normalised Fourier coefficients of the three components.
std::array<std::vector<Complex>, 3> vec_spectrum(const VecField& v);

}  // namespace vmlk
