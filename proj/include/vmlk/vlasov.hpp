#pragma once

#include <vector>

#include "json.hpp"
#include "vmlk/dist_field.hpp"
#include "vmlk/grid.hpp"

namespace vmlk {

Vec3 cross(const Vec3& a, const Vec3& b);

/// E + v x B.
Vec3 lorentz(const Vec3& E, const Vec3& B, const Vec3& v);

/// v . grad_x f + (E + v x B) . grad_v f - nu Q(f, f) at every (x, v) sample,
/// laid out like DistField::values(). grad_x is spectral at fixed v,
/// grad_v f is f grad_v(log f) at fixed x. Q is evaluated once per distinct
/// velocity slice and skipped entirely when nu == 0.
std::vector<double> vlasov_residual(const DistField& f, const VecField& E, const VecField& B, double nu);

struct MaxwellResiduals {
  VecField ampere;     // curl B - J
  ScalarField gauss;   // div E - (rho - rho_ion)
  ScalarField divB;    // div B
  VecField curlE;      // curl E, diagnostic only
};

MaxwellResiduals maxwell_residuals(const DistField& f, const VecField& E, const VecField& B, double rho_ion);

struct SteadyStateTolerances {
  double vlasov = 1e-3;
  double ampere = 1e-6;
  double gauss = 1e-6;
  double divb = 1e-6;
  double curle = 1e-6;
};

struct ResidualNorm {
  double sup = 0.0;
  double l2 = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SteadyStateReport {
  ResidualNorm vlasov;
  ResidualNorm ampere;
  ResidualNorm gauss;
  ResidualNorm divb;
  /// Reported with its own flag; it does not enter `pass`.
  ResidualNorm curle;
  /// Eqs. (1)-(4) all within tolerance.
  bool pass = false;
};

SteadyStateReport steady_state_report(const DistField& f, const VecField& E, const VecField& B, double nu,
                                      double rho_ion, const SteadyStateTolerances& tol = {});

void to_json(nlohmann::json& j, const SteadyStateReport& r);

}  // namespace vmlk
