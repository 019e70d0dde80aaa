#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vmlk/dist_field.hpp"
#include "vmlk/grid.hpp"
#include "vmlk/maxwell_eq.hpp"

namespace vmlk {

/// std::mt19937_64 (the standard-fixed 64-bit Mersenne Twister, default
/// constants) with uniform doubles (x >> 11) * 2^-53, so fixtures depend only on
/// the seed and not on the standard library's distribution implementations.
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// M(rho, u, T)(v) (1 + 1/2 g(v)) with g a random cosine series over the
/// wavevectors m in {0,1,2}^3 \ {0} of the box, |g| <= 1, and (rho, u, T)
/// drawn from [0.5,2] x [-0.5,0.5]^3 x [0.5,1.5].
std::vector<double> random_band_limited(const VelocityGrid& grid, std::uint64_t seed);

/// 1/2 [M(1, +u, T) + M(1, -u, T)].
std::vector<double> bi_maxwellian(const VelocityGrid& grid, const Vec3& u = {1.0, 0.0, 0.0}, double T = 1.0);

/// Random vector field with Fourier modes |k_i| <= kmax and amplitudes in [-1, 1].
VecField random_vec_field(const TorusGrid& grid, std::uint64_t seed, int kmax = 2);
ScalarField random_scalar_field(const TorusGrid& grid, std::uint64_t seed, int kmax = 2);

/// The same velocity slice at every torus node.
DistField uniform_in_x(const TorusGrid& torus, const VelocityGrid& velocity, const std::vector<double>& slice);

/// Candidate steady state (f, E, B) with its physical parameters.
struct Candidate {
  DistField f;
  VecField E;
  VecField B;
  double nu = 1.0;
  double rho_ion = 1.0;
};

/// (M(rho_ion, 0, T), 0, B0).
Candidate equilibrium_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                                const Vec3& B0);
/// Local Maxwellians with T(x) = T (1 + amplitude sin 2 pi x1).
Candidate varying_temperature_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                                        double amplitude = 0.1);
/// M(rho_ion, u, T) at every node.
Candidate drifting_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                             const Vec3& u = {0.3, 0.0, 0.0});
/// Equilibrium f and E = 0 with B = B0 + amplitude (sin 2 pi x3, 0, 0).
Candidate nonharmonic_b_candidate(const TorusGrid& torus, const VelocityGrid& velocity, double rho_ion, double T,
                                  const Vec3& B0, double amplitude = 0.1);

/// Candidate by name: equilibrium, drifting, varying_T, nonharmonic_B.
Candidate named_candidate(const std::string& name, const TorusGrid& torus, const VelocityGrid& velocity,
                          double rho_ion, double T, const Vec3& B0);

}  // namespace vmlk
