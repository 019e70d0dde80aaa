#include "vmlk/fields.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vmlk/spectral.hpp"

namespace vmlk {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::array<int, 3> derivative_k(const TorusGrid& g, std::size_t idx) {
  const auto j = g.axis_indices(idx);
  return {g.derivative_wavenumber(j[0]), g.derivative_wavenumber(j[1]), g.derivative_wavenumber(j[2])};
}

}  // namespace

ScalarField divergence(const VecField& v) {
  ScalarField out(v.grid);
  for (int a = 0; a < 3; ++a) {
    const ScalarField d = torus_partial(v.component(a), a);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += d.values[i];
  }
  return out;
}

VecField curl(const VecField& v) {
  VecField out(v.grid);
  // (curl v)_a = d_b v_c - d_c v_b for cyclic (a, b, c)
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    const ScalarField dbvc = torus_partial(v.component(c), b);
    const ScalarField dcvb = torus_partial(v.component(b), c);
    for (std::size_t i = 0; i < v.grid.size(); ++i) out.components[a][i] = dbvc.values[i] - dcvb.values[i];
  }
  return out;
}

VecField gradient(const ScalarField& s) {
  VecField out(s.grid);
  for (int a = 0; a < 3; ++a) out.components[a] = torus_partial(s, a).values;
  return out;
}

GaussSolveResult solve_gauss(const ScalarField& rho, double rho_ion, double neutrality_tol) {
  const TorusGrid& g = rho.grid;
  const double imbalance = torus_mean(rho) - rho_ion;
  if (!(std::abs(imbalance) <= neutrality_tol))
    throw NeutralityError("solve_gauss: net charge " + std::to_string(imbalance) +
                          " on the torus; Gauss's law needs mean(rho) = rho_ion");

  ScalarField source(g);
  for (std::size_t i = 0; i < g.size(); ++i) source.values[i] = rho.values[i] - rho_ion;

  TorusTransform t(g, 1);
  std::vector<Complex> src(g.size()), phi(g.size());
  t.forward(source.values, src);
  std::array<std::vector<Complex>, 3> e;
  for (auto& c : e) c.assign(g.size(), Complex(0.0, 0.0));
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const auto k = derivative_k(g, idx);
    const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    if (k2 == 0.0) continue;
    phi[idx] = src[idx] / (kTwoPi * kTwoPi * k2);
    for (int a = 0; a < 3; ++a) e[a][idx] = -Complex(0.0, kTwoPi * k[a]) * phi[idx];
  }

  GaussSolveResult r;
  r.potential = ScalarField(g);
  t.inverse(phi, r.potential.values);
  r.E = VecField(g);
  for (int a = 0; a < 3; ++a) t.inverse(e[a], r.E.components[a]);

  const ScalarField div = divergence(r.E);
  for (std::size_t i = 0; i < g.size(); ++i)
    r.residual_div = std::max(r.residual_div, std::abs(div.values[i] - source.values[i]));
  r.residual_curl = sup_norm(curl(r.E));
  return r;
}

std::array<std::vector<Complex>, 3> vec_spectrum(const VecField& v) {
  std::array<std::vector<Complex>, 3> out;
  const double norm = 1.0 / static_cast<double>(v.grid.size());
  for (int a = 0; a < 3; ++a) {
    out[a] = spectrum(v.component(a));
    for (auto& c : out[a]) c *= norm;
  }
  return out;
}

HarmonicReport harmonic_constant_check(const VecField& B, double tol) {
  HarmonicReport r;
  r.curl_norm = sup_norm(curl(B));
  r.div_norm = sup_norm(divergence(B));
  r.B0 = torus_mean(B);
  if (!(r.curl_norm <= tol && r.div_norm <= tol)) return r;

  const auto modes = vec_spectrum(B);
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, sup_norm(B));
  const double base = std::hypot(r.curl_norm, r.div_norm) / kTwoPi;
  r.mode_bound = base + slack;
  bool ok = true;
  for (std::size_t idx = 1; idx < B.grid.size(); ++idx) {
    const double amp = std::sqrt(std::norm(modes[0][idx]) + std::norm(modes[1][idx]) + std::norm(modes[2][idx]));
    r.max_mode = std::max(r.max_mode, amp);
    const auto k = derivative_k(B.grid, idx);
    const double kn = std::sqrt(static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
    // Nyquist-only modes are invisible to the derivatives; nothing bounds them but rounding.
    const double allowed = kn > 0.0 ? base / kn + slack : slack;
    if (amp > allowed) ok = false;
  }
  r.is_constant = ok;
  return r;
}

}  // namespace vmlk
