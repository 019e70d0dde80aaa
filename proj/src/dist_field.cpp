#include "vmlk/dist_field.hpp"

#include "vmlk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <numbers>
#include <string_view>
#include <unordered_map>

namespace vmlk {

DistField::DistField(const TorusGrid& torus, const VelocityGrid& velocity, double fill)
    : torus_(torus), velocity_(velocity), values_(torus.size() * velocity.size(), fill) {}

double DistField::min_value() const {
  double m = values_.empty() ? 0.0 : values_.front();
  for (double x : values_) {
    if (std::isnan(x)) return x;
    m = std::min(m, x);
  }
  return m;
}

ScalarField density(const DistField& f) {
  ScalarField rho(f.torus());
  for (std::size_t x = 0; x < f.torus().size(); ++x) rho.values[x] = integrate_v(f.velocity(), f.slice(x));
  return rho;
}

VecField current(const DistField& f) {
  VecField j(f.torus());
  const VelocityGrid& vg = f.velocity();
  for (std::size_t x = 0; x < f.torus().size(); ++x) {
    const auto s = f.slice(x);
    for (int a = 0; a < 3; ++a) {
      double sum = 0.0;
      const auto c = vg.coords(a);
      for (std::size_t i = 0; i < s.size(); ++i) sum += c[i] * s[i];
      j.components[a][x] = vg.weight() * sum;
    }
  }
  return j;
}

std::vector<std::size_t> slice_representatives(const DistField& f) {
  const std::size_t nx = f.torus().size();
  const std::size_t bytes = f.velocity().size() * sizeof(double);
  std::vector<std::size_t> rep(nx);
  std::unordered_multimap<std::size_t, std::size_t> seen;
  for (std::size_t x = 0; x < nx; ++x) {
    const auto s = f.slice(x);
    const std::string_view key(reinterpret_cast<const char*>(s.data()), bytes);
    const std::size_t h = std::hash<std::string_view>{}(key);
    rep[x] = x;
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (std::memcmp(f.slice(it->second).data(), s.data(), bytes) == 0) {
        rep[x] = it->second;
        break;
      }
    }
    if (rep[x] == x) seen.emplace(h, x);
  }
  return rep;
}

double total_mass(const DistField& f) { return torus_mean(density(f)); }

namespace {

// Applies modes(k, v) *= factor(k_eff . v) across all velocity nodes.
template <class Factor>
std::vector<double> apply_mode_factor(const DistField& f, Factor factor) {
  const TorusGrid& tg = f.torus();
  const VelocityGrid& vg = f.velocity();
  const std::size_t nv = vg.size();
  TorusTransform t(tg, nv);
  std::vector<Complex> modes(f.values().size());
  t.forward(f.values(), modes);
#pragma omp parallel for schedule(static)
  for (std::size_t x = 0; x < tg.size(); ++x) {
    const auto j = tg.axis_indices(x);
    const double k0 = tg.derivative_wavenumber(j[0]);
    const double k1 = tg.derivative_wavenumber(j[1]);
    const double k2 = tg.derivative_wavenumber(j[2]);
    Complex* m = modes.data() + x * nv;
    for (std::size_t i = 0; i < nv; ++i) {
      const double kv = k0 * vg.coords(0)[i] + k1 * vg.coords(1)[i] + k2 * vg.coords(2)[i];
      m[i] *= factor(kv);
    }
  }
  std::vector<double> out(f.values().size());
  t.inverse(modes, out);
  return out;
}

}  // namespace

std::vector<double> transport_term(const DistField& f) {
  const double two_pi = 2.0 * std::numbers::pi;
  return apply_mode_factor(f, [&](double kv) { return Complex(0.0, two_pi * kv); });
}

void free_stream(DistField& f, double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  f.values() = apply_mode_factor(f, [&](double kv) { return std::polar(1.0, -two_pi * kv * t); });
}

}  // namespace vmlk
