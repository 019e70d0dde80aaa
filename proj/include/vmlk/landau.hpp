#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "vmlk/grid.hpp"

namespace vmlk {

/// Coulomb kernel Psi(r) = r^{-3}. Throws PreconditionError for r <= 0.
double coulomb_psi(double r);

/// A(z) = Psi(|z|) (|z|^2 I - z z^T). Symmetric, positive semi-definite,
/// annihilates z. For Coulomb this is |z|^{-1} times the projector orthogonal to z.
struct LandauMatrix {
  std::array<std::array<double, 3>, 3> m{};

  Vec3 apply(const Vec3& w) const;
  double operator()(int i, int j) const { return m[i][j]; }
};

/// Throws PreconditionError for z = 0; callers exclude the self pair.
LandauMatrix landau_matrix(const Vec3& z);

/// Radial kernel Psi(r) for non-Coulomb experiments. The Coulomb path does
/// not go through this hook.
using RadialKernel = std::function<double(double)>;
LandauMatrix landau_matrix(const Vec3& z, const RadialKernel& psi);

struct CollisionOutput {
  /// Q(f, f) per velocity node; the collision frequency nu is not applied.
  std::vector<double> Q;
  /// Landau flux F(v_i) per node and axis, before the no-flux closure.
  std::array<std::vector<double>, 3> flux;
  /// Largest magnitude of either half of the flux (diffusion abar.grad f or
  /// friction f.bbar) over all nodes. Cancellations in F are measured against it.
  double flux_scale = 0.0;
};

/// Landau-Coulomb collision operator in divergence form.
///
///   F_i = w sum_{j != i} A(v_i - v_j) f_i f_j (s_i - s_j),   s = grad_v(log f)
///   Q_i = central-difference divergence of F with zero normal flux on the
///         outermost node layer of every axis.
///
/// The self pair j = i is the only z = 0 pair on the cell-centred grid and is
/// skipped. Pair sums run over j ascending for every i; the outer loop over i
/// is split across OpenMP threads with each i computed independently, so the
/// result does not depend on the thread count.
/// Throws PreconditionError unless f > 0 at every node.
CollisionOutput collision_Q(const VelocityGrid& grid, std::span<const double> f);
CollisionOutput collision_Q(const VelocityGrid& grid, std::span<const double> f, const RadialKernel& psi);

/// H(f) = int f log f. Requires f > 0.
double entropy(const VelocityGrid& grid, std::span<const double> f);

struct Dissipation {
  /// D(f) = -1/2 w^2 sum_{i != j} f_i f_j xi^T A(v_i - v_j) xi,  xi = s_i - s_j.
  double value = 0.0;
  /// 1/2 w^2 sum_{i != j} f_i f_j Psi |z|^2 (|s_i|^2 + |s_j|^2), an upper bound on
  /// the magnitude of the summed terms.
  double scale = 0.0;
};

/// Evaluated as -1/2 w^2 sum f_i f_j |z x xi|^2 Psi(|z|), a sum of non-positive
/// terms, so the returned value is <= 0 in floating point as well.
Dissipation dissipation_terms(const VelocityGrid& grid, std::span<const double> f);
double dissipation(const VelocityGrid& grid, std::span<const double> f);

struct ConservationResiduals {
  double mass = 0.0;
  Vec3 momentum{0.0, 0.0, 0.0};
  double energy = 0.0;
};

/// (int Q, int v Q, int |v|^2 Q) by midpoint quadrature.
ConservationResiduals conservation_residuals(const VelocityGrid& grid, std::span<const double> Q);

/// Number of ordered pairs (i, j), i != j, visited by one collision_Q call.
double collision_pair_count(const VelocityGrid& grid);

}  // namespace vmlk
