#include <cmath>
#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "vmlk/dist_field.hpp"
#include "vmlk/fields.hpp"
#include "vmlk/fixtures.hpp"
#include "vmlk/maxwell_eq.hpp"
#include "vmlk/vlasov.hpp"

using namespace vmlk;
using std::numbers::pi;

namespace {

double sup_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

DistField perturbed(const TorusGrid& t, const VelocityGrid& g, double eps) {
  DistField f(t, g);
  const auto m = sample_maxwellian(g, {});
  for (std::size_t x = 0; x < t.size(); ++x) {
    const double s = 1.0 + eps * std::sin(2 * pi * t.position(x)[0]);
    auto sl = f.slice(x);
    for (std::size_t i = 0; i < g.size(); ++i) sl[i] = m[i] * s;
  }
  return f;
}

}  // namespace

TEST_CASE("lorentz") {
  CHECK(lorentz({0, 0, 0}, {0, 1, 0}, {1, 0, 0}) == Vec3{0, 0, 1});
  CHECK(lorentz({1, 2, 3}, {0, 0, 0}, {4, 5, 6}) == Vec3{1, 2, 3});
  FixtureRng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Vec3 v{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec3 B{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec3 a = lorentz({0, 0, 0}, B, v);
    CHECK(std::abs(a[0] * v[0] + a[1] * v[1] + a[2] * v[2]) <= 1e-14 * 125.0);
  }
}

TEST_CASE("DistField moments and slice deduplication") {
  const TorusGrid t(4);
  const auto g = make_velocity_grid(6.0, 12);
  const auto f = uniform_in_x(t, g, sample_maxwellian(g, {2.0, {0.3, 0, 0}, 1.0}));
  const auto rho = density(f);
  const auto j = current(f);
  for (std::size_t x = 0; x < t.size(); ++x) {
    CHECK(std::abs(rho.values[x] - 2.0) <= 1e-5);
    CHECK(std::abs(j.components[0][x] - 0.6) <= 1e-5);
  }
  CHECK(std::abs(total_mass(f) - 2.0) <= 1e-5);
  const auto rep = slice_representatives(f);
  for (std::size_t r : rep) CHECK(r == 0);

  const auto p = perturbed(t, g, 0.1);
  const auto rp = slice_representatives(p);
  std::size_t distinct = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t first = x;
    for (std::size_t y = 0; y < x; ++y)
      if (std::equal(p.slice(y).begin(), p.slice(y).end(), p.slice(x).begin())) {
        first = y;
        break;
      }
    CHECK(rp[x] == first);
    distinct += first == x;
  }
  // sin 2 pi x1 takes three distinct values on four nodes once rounded into 1 + 0.1 sin
  CHECK(distinct == 3);
}

TEST_CASE("transport and free streaming") {
  const TorusGrid t(8);
  const auto g = make_velocity_grid(6.0, 8);
  const auto f = perturbed(t, g, 0.5);
  const auto tr = transport_term(f);
  double e = 0.0;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vec3 v = g.velocity(i);
      const double expect = v[0] * 2 * pi * 0.5 * std::cos(2 * pi * t.position(x)[0]) *
                            oracle::gaussian(1.0, {0, 0, 0}, 1.0, v);
      e = std::max(e, std::abs(tr[x * g.size() + i] - expect));
    }
  CHECK(e <= 1e-8);

  auto s = f;
  free_stream(s, 0.37);
  double es = 0.0;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vec3 v = g.velocity(i);
      const double expect = oracle::gaussian(1.0, {0, 0, 0}, 1.0, v) *
                            (1.0 + 0.5 * std::sin(2 * pi * (t.position(x)[0] - v[0] * 0.37)));
      es = std::max(es, std::abs(s.slice(x)[i] - expect));
    }
  CHECK(es <= 1e-12);
  free_stream(s, -0.37);
  CHECK(sup_abs(s.values()) > 0.0);
  double back = 0.0;
  for (std::size_t k = 0; k < s.values().size(); ++k) back = std::max(back, std::abs(s.values()[k] - f.values()[k]));
  CHECK(back <= 1e-12);
}

TEST_CASE("vlasov_residual") {
  const TorusGrid t(8);
  const auto g = make_velocity_grid(6.0, 16);

  SUBCASE("equilibrium with a constant magnetic field") {
    const auto c = equilibrium_candidate(t, g, 1.0, 1.0, {0, 0, 1});
    for (double nu : {0.0, 1.0, 5.0}) CHECK(sup_abs(vlasov_residual(c.f, c.E, c.B, nu)) <= 1e-6);
  }
  SUBCASE("collisionless transport closed form") {
    const auto h = make_velocity_grid(6.0, 8);
    const auto f = perturbed(t, h, 0.5);
    const auto r = vlasov_residual(f, VecField(t), VecField(t), 0.0);
    double e = 0.0;
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t i = 0; i < h.size(); ++i) {
        const Vec3 v = h.velocity(i);
        const double expect = v[0] * 2 * pi * 0.5 * std::cos(2 * pi * t.position(x)[0]) *
                              oracle::gaussian(1.0, {0, 0, 0}, 1.0, v);
        e = std::max(e, std::abs(r[x * h.size() + i] - expect));
      }
    CHECK(e <= 1e-8);
  }
  SUBCASE("constant state") {
    const auto h = make_velocity_grid(2.0, 6);
    const DistField f(t, h, 0.7);
    CHECK(sup_abs(vlasov_residual(f, VecField(t), VecField(t), 0.0)) == 0.0);
  }
  SUBCASE("errors") {
    const auto h = make_velocity_grid(2.0, 4);
    DistField f(t, h, 1.0);
    CHECK_THROWS_AS(vlasov_residual(f, VecField(TorusGrid(4)), VecField(t), 0.0), GridMismatchError);
    f.values()[5] = 0.0;
    CHECK_THROWS_AS(vlasov_residual(f, VecField(t), VecField(t), 0.0), PreconditionError);
  }
}

TEST_CASE("maxwell_residuals") {
  const TorusGrid t(8);
  const auto g = make_velocity_grid(6.0, 16);
  const auto c = equilibrium_candidate(t, g, 1.0, 1.0, {0, 0, 2});
  const auto r = maxwell_residuals(c.f, c.E, c.B, 1.0);
  CHECK(sup_norm(r.ampere) <= 1e-6);
  CHECK(sup_norm(r.gauss) <= 1e-6);
  CHECK(sup_norm(r.divB) <= 1e-6);
  CHECK(sup_norm(r.curlE) <= 1e-6);

  VecField B(t);
  for (std::size_t x = 0; x < t.size(); ++x) B.components[0][x] = std::sin(2 * pi * t.position(x)[2]);
  const auto rb = maxwell_residuals(c.f, c.E, B, 1.0);
  CHECK(sup_norm(rb.ampere) == doctest::Approx(2 * pi).epsilon(1e-6));

  const auto d = drifting_candidate(t, g, 1.0, 1.0);
  for (std::uint64_t seed : {1, 2}) {
    const auto rd = maxwell_residuals(d.f, d.E, random_vec_field(t, seed), 1.0);
    const Vec3 m = torus_mean(rd.ampere);
    CHECK(std::abs(m[0] + 0.3) <= 1e-5);
    CHECK(std::abs(m[1]) <= 1e-5);
    CHECK(std::abs(m[2]) <= 1e-5);
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Vec3 m = torus_mean(curl(random_vec_field(t, seed)));
    for (double mi : m) CHECK(std::abs(mi) <= 1e-12);
  }
}

TEST_CASE("steady_state_report") {
  const TorusGrid t(8);
  const auto g = make_velocity_grid(6.0, 16);
  const auto c = equilibrium_candidate(t, g, 1.0, 1.0, {0, 0, 2});
  const auto ok = steady_state_report(c.f, c.E, c.B, 1.0, 1.0);
  CHECK(ok.pass);
  CHECK(ok.vlasov.pass);
  CHECK(ok.ampere.pass);
  CHECK(ok.gauss.pass);
  CHECK(ok.divb.pass);
  CHECK(ok.curle.pass);

  VecField E(t);
  for (std::size_t x = 0; x < t.size(); ++x) E.components[0][x] = 0.01 * std::sin(2 * pi * t.position(x)[0]);
  const auto bad = steady_state_report(c.f, E, c.B, 1.0, 1.0);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.gauss.pass);
  CHECK(bad.gauss.sup == doctest::Approx(0.02 * pi).epsilon(1e-6));
  CHECK(bad.vlasov.pass);
  CHECK(bad.ampere.pass);
  CHECK(bad.divb.pass);

  // a divergence-free perturbation leaves the Gauss residual alone
  VecField E2 = E;
  for (std::size_t x = 0; x < t.size(); ++x) E2.components[1][x] += 0.05 * std::cos(2 * pi * t.position(x)[0]);
  const auto r1 = maxwell_residuals(c.f, E, c.B, 1.0), r2 = maxwell_residuals(c.f, E2, c.B, 1.0);
  for (std::size_t x = 0; x < t.size(); ++x) CHECK(std::abs(r1.gauss.values[x] - r2.gauss.values[x]) <= 1e-10);

  const auto h = make_velocity_grid(6.0, 8);
  auto f = uniform_in_x(t, h, bi_maxwellian(h));
  const auto zero = steady_state_report(f, random_vec_field(t, 1), random_vec_field(t, 2), 1.0, 0.5,
                                        SteadyStateTolerances{0, 0, 0, 0, 0});
  CHECK_FALSE(zero.pass);
  CHECK_FALSE(zero.vlasov.pass);
  CHECK_FALSE(zero.ampere.pass);
  CHECK_FALSE(zero.gauss.pass);
  CHECK_FALSE(zero.divb.pass);
  CHECK_FALSE(zero.curle.pass);

  nlohmann::json j = ok;
  for (const char* k : {"vlasov_sup", "ampere_sup", "gauss_sup", "divb_sup", "curle_sup", "pass"}) CHECK(j.contains(k));
  CHECK(j["pass"] == true);
}

TEST_CASE("Gauss solutions are curl free") {
  const TorusGrid t(8);
  const auto h = make_velocity_grid(6.0, 8);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto rho = random_scalar_field(t, seed);
    const double m = torus_mean(rho);
    for (double& r : rho.values) r += 2.0 - m;
    const auto s = solve_gauss(rho, 2.0, 1e-12);
    DistField f(t, h, 1.0);
    const auto r = maxwell_residuals(f, s.E, VecField(t), 1.0);
    CHECK(sup_norm(r.curlE) <= 1e-10);
  }
}
