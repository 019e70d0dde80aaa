#pragma once

#include <span>
#include <vector>

#include "vmlk/grid.hpp"

namespace vmlk {

/// Samples of f(x, v) on TorusGrid x VelocityGrid. Torus node is the outer
/// index, velocity node the inner one, so each torus node owns a contiguous
/// velocity slice.
class DistField {
 public:
  DistField(const TorusGrid& torus, const VelocityGrid& velocity, double fill = 0.0);

  const TorusGrid& torus() const { return torus_; }
  const VelocityGrid& velocity() const { return velocity_; }

  std::span<double> slice(std::size_t x) { return {values_.data() + x * velocity_.size(), velocity_.size()}; }
  std::span<const double> slice(std::size_t x) const {
    return {values_.data() + x * velocity_.size(), velocity_.size()};
  }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  /// Smallest sample, or NaN when any sample is NaN.
  double min_value() const;

 private:
  TorusGrid torus_;
  VelocityGrid velocity_;
  std::vector<double> values_;
};

/// rho(x) = int f(x, v) dv
ScalarField density(const DistField& f);
/// J(x) = int v f(x, v) dv
VecField current(const DistField& f);

/// For every torus node, the first node whose velocity slice is bitwise
/// identical. Lets per-slice kernels run once per distinct slice.
std::vector<std::size_t> slice_representatives(const DistField& f);

/// Total mass (1/M^3) sum_x int f dv.
double total_mass(const DistField& f);

/// v . grad_x f with the spectral gradient taken at every fixed velocity node.
std::vector<double> transport_term(const DistField& f);

/// Exact free streaming f(x, v) <- f(x - v t, v) by the phase shift
/// exp(-i 2 pi k.v t) per velocity node. The Nyquist bin of an even M is left
/// unshifted, so streaming by t and then -t is the identity up to rounding.
void free_stream(DistField& f, double t);

}  // namespace vmlk
