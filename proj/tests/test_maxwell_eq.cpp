#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "vmlk/fixtures.hpp"
#include "vmlk/maxwell_eq.hpp"

using namespace vmlk;
using std::numbers::pi;

TEST_CASE("equilibrium Maxwellian") {
  CHECK(equilibrium_maxwellian(1.0, 1.0, {0, 0, 0}) == doctest::Approx(6.349364e-2).epsilon(1e-6));
  CHECK(equilibrium_maxwellian(1.0, 1.0, {0, 0, 0}) == doctest::Approx(std::pow(2 * pi, -1.5)).epsilon(1e-15));
  CHECK_THROWS_AS(equilibrium_maxwellian(0.0, 1.0, {0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(equilibrium_maxwellian(1.0, -1.0, {0, 0, 0}), PreconditionError);

  FixtureRng rng(5);
  for (int k = 0; k < 50; ++k) {
    const double T = rng.uniform(0.3, 3.0);
    const Vec3 v{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    CHECK(equilibrium_maxwellian(2.0, T, v) == doctest::Approx(2.0 * equilibrium_maxwellian(1.0, T, v)).epsilon(1e-15));
    double prev = equilibrium_maxwellian(1.0, T, {0, 0, 0});
    for (double s = 0.1; s < 4.0; s += 0.1) {
      const double cur = equilibrium_maxwellian(1.0, T, {s * v[0], s * v[1], s * v[2]});
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("local Maxwellian and parameter conversions") {
  const LogQuadParams q{-1.5 * std::log(2 * pi), {0, 0, 0}, -0.5};
  FixtureRng rng(9);
  for (int k = 0; k < 20; ++k) {
    const Vec3 v{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
    CHECK(local_maxwellian(q, v) == doctest::Approx(equilibrium_maxwellian(1, 1, v)).epsilon(1e-14));
  }
  const MaxwellianParams p{2.0, {0.5, 0.0, 0.0}, 0.8};
  const auto back = from_log_quad(to_log_quad(p));
  CHECK(std::abs(back.rho - 2.0) <= 1e-12);
  CHECK(std::abs(back.u[0] - 0.5) <= 1e-12);
  CHECK(std::abs(back.u[1]) <= 1e-12);
  CHECK(std::abs(back.T - 0.8) <= 1e-12);
  CHECK_THROWS_AS(local_maxwellian({0.0, {0, 0, 0}, 0.0}, {0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(from_log_quad({0.0, {0, 0, 0}, 0.1}), PreconditionError);

  SUBCASE("equilibrium equals the local form of its converted parameters") {
    for (double T : {0.5, 1.0, 2.0}) {
      const auto lq = to_log_quad({1.7, {0, 0, 0}, T});
      for (int k = 0; k < 20; ++k) {
        const Vec3 v{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
        CHECK(local_maxwellian(lq, v) == doctest::Approx(equilibrium_maxwellian(1.7, T, v)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("moments") {
  const auto g = make_velocity_grid(6.0, 16);
  const auto m = moments(g, sample_maxwellian(g, {}));
  CHECK(std::abs(m.rho - 1.0) <= 1e-6);
  for (double u : m.u) CHECK(std::abs(u) <= 1e-6);
  CHECK(std::abs(m.T - 1.0) <= 1e-6);

  const auto s = moments(g, sample_maxwellian(g, {2.0, {0.5, 0.0, 0.0}, 0.8}));
  CHECK(std::abs(s.rho - 2.0) <= 1e-5);
  CHECK(std::abs(s.u[0] - 0.5) <= 1e-5);
  CHECK(std::abs(s.T - 0.8) <= 1e-5);

  std::vector<double> zero(g.size(), 0.0);
  CHECK_THROWS_AS(moments(g, zero), DegenerateDensityError);

  SUBCASE("moments invert construction on the default box for moderate states") {
    FixtureRng rng(22);
    for (int k = 0; k < 20; ++k) {
      MaxwellianParams p{rng.uniform(0.5, 2.0), {rng.uniform(-0.28, 0.28), rng.uniform(-0.28, 0.28), rng.uniform(-0.28, 0.28)},
                         rng.uniform(0.5, 1.0)};
      const auto r = moments(g, sample_maxwellian(g, p));
      CHECK(std::abs(r.rho - p.rho) <= 1e-5);
      for (int a = 0; a < 3; ++a) CHECK(std::abs(r.u[a] - p.u[a]) <= 1e-5);
      CHECK(std::abs(r.T - p.T) <= 1e-5);
    }
  }
  SUBCASE("moments invert construction over the documented range") {
    // a wider box so truncation of the hottest, fastest case stays below 1e-5
    const auto w = make_velocity_grid(10.0, 24);
    FixtureRng rng(21);
    for (int k = 0; k < 20; ++k) {
      MaxwellianParams p;
      p.rho = rng.uniform(0.5, 2.0);
      p.T = rng.uniform(0.5, 2.0);
      Vec3 u{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
      if (n > 1.0) for (double& c : u) c /= n;
      p.u = u;
      const auto f = sample_maxwellian(w, p);
      for (double x : f) CHECK(x > 0.0);
      const auto r = moments(w, f);
      CHECK(std::abs(r.rho - p.rho) <= 1e-5);
      for (int a = 0; a < 3; ++a) CHECK(std::abs(r.u[a] - p.u[a]) <= 1e-5);
      CHECK(std::abs(r.T - p.T) <= 1e-5);
    }
  }
}

TEST_CASE("Maxwellian parameter strings") {
  const auto p = parse_maxwellian_params("rho=1, u=0.5,0,0, T=0.8");
  CHECK(p.rho == 1.0);
  CHECK(p.u == Vec3{0.5, 0.0, 0.0});
  CHECK(p.T == 0.8);
  const auto q = parse_maxwellian_params("T = 2 , rho = 3, u = -1, 0.25, 0");
  CHECK(q.rho == 3.0);
  CHECK(q.u == Vec3{-1.0, 0.25, 0.0});
  CHECK(q.T == 2.0);
  CHECK_THROWS_AS(parse_maxwellian_params("rho=1, T=1"), PreconditionError);
  CHECK_THROWS_AS(parse_maxwellian_params("rho=1, u=0,0, T=1"), PreconditionError);
  CHECK_THROWS_AS(parse_maxwellian_params("rho=x, u=0,0,0, T=1"), PreconditionError);
  CHECK_THROWS_AS(validate({-1.0, {0, 0, 0}, 1.0}), PreconditionError);
}
