#include "vmlk/landau.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vmlk {
namespace {

void require_positive(std::span<const double> f, const char* who) {
  for (double x : f)
    if (!(x > 0.0) || !std::isfinite(x)) throw PreconditionError(std::string(who) + ": f must be positive and finite at every node");
}

// Psi(r) and Psi(r) r^2 from r^2.
struct CoulombKernel {
  void operator()(double r2, double& psi, double& psi_r2) const {
    const double inv_r = 1.0 / std::sqrt(r2);
    psi_r2 = inv_r;
    psi = inv_r * inv_r * inv_r;
  }
};

struct GenericKernel {
  const RadialKernel* k;
  void operator()(double r2, double& psi, double& psi_r2) const {
    psi = (*k)(std::sqrt(r2));
    psi_r2 = psi * r2;
  }
};

struct Soa {
  std::span<const double> vx, vy, vz, f, gx, gy, gz;
};

// Diffusion matrix abar_i and friction vector bbar_i accumulated over j in
// [begin, end). Flux is F_i = w (abar_i g_i - f_i bbar_i).
struct FluxAccum {
  double s0 = 0, sxx = 0, sxy = 0, sxz = 0, syy = 0, syz = 0, szz = 0, bx = 0, by = 0, bz = 0;
};

template <class Kernel>
void accumulate_flux(const Soa& d, std::size_t i, std::size_t begin, std::size_t end, const Kernel& kernel,
                     FluxAccum& acc) {
  const double xi = d.vx[i], yi = d.vy[i], zi = d.vz[i];
  const double* vx = d.vx.data();
  const double* vy = d.vy.data();
  const double* vz = d.vz.data();
  const double* f = d.f.data();
  const double* gx = d.gx.data();
  const double* gy = d.gy.data();
  const double* gz = d.gz.data();
  double s0 = 0, sxx = 0, sxy = 0, sxz = 0, syy = 0, syz = 0, szz = 0, bx = 0, by = 0, bz = 0;
#pragma omp simd reduction(+ : s0, sxx, sxy, sxz, syy, syz, szz, bx, by, bz)
  for (std::size_t j = begin; j < end; ++j) {
    const double zx = xi - vx[j], zy = yi - vy[j], zz = zi - vz[j];
    const double r2 = zx * zx + zy * zy + zz * zz;
    double psi, psi_r2;
    kernel(r2, psi, psi_r2);
    const double fp = f[j] * psi;
    s0 += f[j] * psi_r2;
    sxx += fp * zx * zx;
    sxy += fp * zx * zy;
    sxz += fp * zx * zz;
    syy += fp * zy * zy;
    syz += fp * zy * zz;
    szz += fp * zz * zz;
    const double zg = zx * gx[j] + zy * gy[j] + zz * gz[j];
    bx += psi_r2 * gx[j] - psi * zx * zg;
    by += psi_r2 * gy[j] - psi * zy * zg;
    bz += psi_r2 * gz[j] - psi * zz * zg;
  }
  acc.s0 += s0;
  acc.sxx += sxx;
  acc.sxy += sxy;
  acc.sxz += sxz;
  acc.syy += syy;
  acc.syz += syz;
  acc.szz += szz;
  acc.bx += bx;
  acc.by += by;
  acc.bz += bz;
}

template <class Kernel>
CollisionOutput collision_impl(const VelocityGrid& grid, std::span<const double> f, const Kernel& kernel) {
  if (f.size() != grid.size()) throw GridMismatchError("collision_Q: sample count does not match grid");
  require_positive(f, "collision_Q");

  const std::size_t n = grid.size();
  const auto score = log_gradient(grid, f);
  std::array<std::vector<double>, 3> g;
  for (int a = 0; a < 3; ++a) {
    g[a].resize(n);
    for (std::size_t i = 0; i < n; ++i) g[a][i] = f[i] * score[a][i];
  }
  const Soa d{grid.coords(0), grid.coords(1), grid.coords(2), f, g[0], g[1], g[2]};
  const double w = grid.weight();

  CollisionOutput out;
  for (auto& c : out.flux) c.assign(n, 0.0);
  std::vector<double> half_scale(n, 0.0);

#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    FluxAccum acc;
    accumulate_flux(d, i, 0, i, kernel, acc);
    accumulate_flux(d, i, i + 1, n, kernel, acc);
    const double gxi = g[0][i], gyi = g[1][i], gzi = g[2][i];
    // abar = s0 I - S
    const double dx = (acc.s0 - acc.sxx) * gxi - acc.sxy * gyi - acc.sxz * gzi;
    const double dy = -acc.sxy * gxi + (acc.s0 - acc.syy) * gyi - acc.syz * gzi;
    const double dz = -acc.sxz * gxi - acc.syz * gyi + (acc.s0 - acc.szz) * gzi;
    const double rx = f[i] * acc.bx, ry = f[i] * acc.by, rz = f[i] * acc.bz;
    out.flux[0][i] = w * (dx - rx);
    out.flux[1][i] = w * (dy - ry);
    out.flux[2][i] = w * (dz - rz);
    half_scale[i] = w * std::max(std::sqrt(dx * dx + dy * dy + dz * dz), std::sqrt(rx * rx + ry * ry + rz * rz));
  }
  for (double s : half_scale) out.flux_scale = std::max(out.flux_scale, s);

  // Central-difference divergence; the normal flux vanishes on the outermost
  // layer of each axis and outside the box.
  const int np = grid.points_per_axis();
  const double inv2h = 1.0 / (2.0 * grid.spacing());
  out.Q.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ia = grid.axis_indices(i);
    double q = 0.0;
    for (int a = 0; a < 3; ++a) {
      const std::size_t s = grid.stride(a);
      const double up = (ia[a] + 1 <= np - 2) ? out.flux[a][i + s] : 0.0;
      const double down = (ia[a] - 1 >= 1) ? out.flux[a][i - s] : 0.0;
      q += up - down;
    }
    out.Q[i] = q * inv2h;
  }
  return out;
}

template <class Kernel>
Dissipation dissipation_impl(const VelocityGrid& grid, std::span<const double> f, const Kernel& kernel) {
  if (f.size() != grid.size()) throw GridMismatchError("dissipation: sample count does not match grid");
  require_positive(f, "dissipation");
  const std::size_t n = grid.size();
  const auto s = log_gradient(grid, f);
  std::vector<double> s2(n);
  for (std::size_t i = 0; i < n; ++i) s2[i] = s[0][i] * s[0][i] + s[1][i] * s[1][i] + s[2][i] * s[2][i];

  const double* vx = grid.coords(0).data();
  const double* vy = grid.coords(1).data();
  const double* vz = grid.coords(2).data();
  const double* fp = f.data();
  const double* sx = s[0].data();
  const double* sy = s[1].data();
  const double* sz = s[2].data();
  const double* s2p = s2.data();

  std::vector<double> term(n, 0.0), bound(n, 0.0);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0, a0 = 0.0, a2 = 0.0;
    auto sweep = [&](std::size_t begin, std::size_t end) {
      double t = 0.0, u0 = 0.0, u2 = 0.0;
#pragma omp simd reduction(+ : t, u0, u2)
      for (std::size_t j = begin; j < end; ++j) {
        const double zx = vx[i] - vx[j], zy = vy[i] - vy[j], zz = vz[i] - vz[j];
        const double ex = sx[i] - sx[j], ey = sy[i] - sy[j], ez = sz[i] - sz[j];
        const double cx = zy * ez - zz * ey;
        const double cy = zz * ex - zx * ez;
        const double cz = zx * ey - zy * ex;
        const double r2 = zx * zx + zy * zy + zz * zz;
        double psi, psi_r2;
        kernel(r2, psi, psi_r2);
        t += fp[j] * psi * (cx * cx + cy * cy + cz * cz);
        u0 += fp[j] * psi_r2;
        u2 += fp[j] * psi_r2 * s2p[j];
      }
      acc += t;
      a0 += u0;
      a2 += u2;
    };
    sweep(0, i);
    sweep(i + 1, n);
    term[i] = fp[i] * acc;
    bound[i] = fp[i] * (s2p[i] * a0 + a2);
  }
  const double w = grid.weight();
  Dissipation d;
  double sum = 0.0, sum_bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += term[i];
    sum_bound += bound[i];
  }
  d.value = -0.5 * w * w * sum;
  d.scale = 0.5 * w * w * sum_bound;
  return d;
}

}  // namespace

double coulomb_psi(double r) {
  if (!(r > 0.0)) throw PreconditionError("coulomb_psi: r must be positive");
  return 1.0 / (r * r * r);
}

Vec3 LandauMatrix::apply(const Vec3& w) const {
  Vec3 out{0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * w[j];
  return out;
}

LandauMatrix landau_matrix(const Vec3& z, const RadialKernel& psi) {
  const double r2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  if (!(r2 > 0.0)) throw PreconditionError("landau_matrix: z must be nonzero");
  const double p = psi(std::sqrt(r2));
  LandauMatrix a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.m[i][j] = p * ((i == j ? r2 : 0.0) - z[i] * z[j]);
  return a;
}

LandauMatrix landau_matrix(const Vec3& z) {
  const double r2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
  if (!(r2 > 0.0)) throw PreconditionError("landau_matrix: z must be nonzero");
  const double inv_r = 1.0 / std::sqrt(r2);
  LandauMatrix a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.m[i][j] = inv_r * ((i == j ? 1.0 : 0.0) - z[i] * z[j] / r2);
  return a;
}

CollisionOutput collision_Q(const VelocityGrid& grid, std::span<const double> f) {
  return collision_impl(grid, f, CoulombKernel{});
}

CollisionOutput collision_Q(const VelocityGrid& grid, std::span<const double> f, const RadialKernel& psi) {
  return collision_impl(grid, f, GenericKernel{&psi});
}

double entropy(const VelocityGrid& grid, std::span<const double> f) {
  if (f.size() != grid.size()) throw GridMismatchError("entropy: sample count does not match grid");
  require_positive(f, "entropy");
  double sum = 0.0;
  for (double x : f) sum += x * std::log(x);
  return grid.weight() * sum;
}

Dissipation dissipation_terms(const VelocityGrid& grid, std::span<const double> f) {
  return dissipation_impl(grid, f, CoulombKernel{});
}

double dissipation(const VelocityGrid& grid, std::span<const double> f) { return dissipation_terms(grid, f).value; }

ConservationResiduals conservation_residuals(const VelocityGrid& grid, std::span<const double> Q) {
  if (Q.size() != grid.size()) throw GridMismatchError("conservation_residuals: sample count does not match grid");
  ConservationResiduals r;
  for (std::size_t i = 0; i < Q.size(); ++i) {
    const double v0 = grid.coords(0)[i], v1 = grid.coords(1)[i], v2 = grid.coords(2)[i];
    r.mass += Q[i];
    r.momentum[0] += v0 * Q[i];
    r.momentum[1] += v1 * Q[i];
    r.momentum[2] += v2 * Q[i];
    r.energy += (v0 * v0 + v1 * v1 + v2 * v2) * Q[i];
  }
  const double w = grid.weight();
  r.mass *= w;
  for (double& p : r.momentum) p *= w;
  r.energy *= w;
  return r;
}

double collision_pair_count(const VelocityGrid& grid) {
  const double n = static_cast<double>(grid.size());
  return n * (n - 1.0);
}

}  // namespace vmlk
