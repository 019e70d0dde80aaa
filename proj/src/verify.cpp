#include "vmlk/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "vmlk/fields.hpp"
#include "vmlk/landau.hpp"
#include "vmlk/spectral.hpp"

namespace vmlk {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double speed(const VelocityGrid& g, std::size_t i) {
  return norm3({g.coords(0)[i], g.coords(1)[i], g.coords(2)[i]});
}

nlohmann::json vec_json(const Vec3& v) { return nlohmann::json::array({v[0], v[1], v[2]}); }

// Fraction of spectral energy in modes with max |k_i| > M/4, over `batch`
// interleaved fields laid out as [torus node][batch].
double spectral_tail(const TorusGrid& tg, std::span<const double> values, std::size_t batch) {
  TorusTransform t(tg, batch);
  std::vector<Complex> modes(values.size());
  t.forward(values, modes);
  const int cut = tg.points_per_axis() / 4;
  double tail = 0.0, total = 0.0;
  for (std::size_t k = 0; k < tg.size(); ++k) {
    const auto j = tg.axis_indices(k);
    int kmax = 0;
    for (int a = 0; a < 3; ++a) kmax = std::max(kmax, std::abs(tg.wavenumber(j[a])));
    double e = 0.0;
    for (std::size_t b = 0; b < batch; ++b) e += std::norm(modes[k * batch + b]);
    total += e;
    if (kmax > cut) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

// max over nodes and axes of |third difference| / h^3, divided by max f.
double third_difference_ratio(const DistField& f) {
  const VelocityGrid& vg = f.velocity();
  const int n = vg.points_per_axis();
  const double h3 = vg.spacing() * vg.spacing() * vg.spacing();
  double dmax = 0.0, fmax = 0.0;
  const auto rep = slice_representatives(f);
  for (std::size_t x = 0; x < rep.size(); ++x) {
    if (rep[x] != x) continue;
    const auto s = f.slice(x);
    for (std::size_t i = 0; i < s.size(); ++i) {
      fmax = std::max(fmax, std::abs(s[i]));
      const auto ia = vg.axis_indices(i);
      for (int a = 0; a < 3; ++a) {
        if (ia[a] + 3 >= n) continue;
        const std::size_t st = vg.stride(a);
        const double d = s[i + 3 * st] - 3.0 * s[i + 2 * st] + 3.0 * s[i + st] - s[i];
        dmax = std::max(dmax, std::abs(d) / h3);
      }
    }
  }
  return fmax > 0.0 ? dmax / fmax : 0.0;
}

}  // namespace

LogQuadFit fit_log_quadratic(const VelocityGrid& grid, std::span<const double> f) {
  if (f.size() != grid.size()) throw GridMismatchError("fit_log_quadratic: sample count does not match grid");
  for (double x : f)
    if (!(x > 0.0) || !std::isfinite(x)) throw PreconditionError("fit_log_quadratic: f must be positive");

  Eigen::Matrix<double, 5, 5> A = Eigen::Matrix<double, 5, 5>::Zero();
  Eigen::Matrix<double, 5, 1> rhs = Eigen::Matrix<double, 5, 1>::Zero();
  std::vector<double> logf(f.size());
  double wsum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v0 = grid.coords(0)[i], v1 = grid.coords(1)[i], v2 = grid.coords(2)[i];
    Eigen::Matrix<double, 5, 1> phi;
    phi << 1.0, v0, v1, v2, v0 * v0 + v1 * v1 + v2 * v2;
    logf[i] = std::log(f[i]);
    A.noalias() += f[i] * phi * phi.transpose();
    rhs.noalias() += f[i] * logf[i] * phi;
    wsum += f[i];
  }
  // Jacobi scaling keeps the 5x5 system well conditioned for any box size.
  Eigen::Matrix<double, 5, 1> d = A.diagonal().cwiseSqrt();
  if ((d.array() <= 0.0).any()) throw Error("fit_log_quadratic: rank-deficient normal system");
  const Eigen::Matrix<double, 5, 5> As = d.cwiseInverse().asDiagonal() * A * d.cwiseInverse().asDiagonal();
  Eigen::LDLT<Eigen::Matrix<double, 5, 5>> ldlt(As);
  const auto D = ldlt.vectorD();
  if (ldlt.info() != Eigen::Success || !(D.minCoeff() > 1e-12 * D.maxCoeff()))
    throw Error("fit_log_quadratic: rank-deficient normal system");
  const Eigen::Matrix<double, 5, 1> theta = d.cwiseInverse().asDiagonal() * ldlt.solve(d.cwiseInverse().asDiagonal() * rhs);

  LogQuadFit fit;
  fit.params = {theta[0], {theta[1], theta[2], theta[3]}, theta[4]};
  double sq = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v0 = grid.coords(0)[i], v1 = grid.coords(1)[i], v2 = grid.coords(2)[i];
    const double model = theta[0] + theta[1] * v0 + theta[2] * v1 + theta[3] * v2 + theta[4] * (v0 * v0 + v1 * v1 + v2 * v2);
    const double r = logf[i] - model;
    sq += f[i] * r * r;
  }
  fit.residual = std::sqrt(sq / wsum);
  return fit;
}

double temperature_uniformity(const ScalarField& c) { return sup_norm(gradient(c)); }

double killing_residual(const VecField& b) {
  std::array<std::array<ScalarField, 3>, 3> jac;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) jac[i][j] = torus_partial(b.component(j), i);
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (std::size_t x = 0; x < b.grid.size(); ++x)
        r = std::max(r, std::abs(jac[i][j].values[x] + jac[j][i].values[x]));
  return r;
}

KillingConstant killing_implies_constant(const VecField& b, double tol) {
  KillingConstant out;
  out.residual = killing_residual(b);
  if (!(out.residual <= tol))
    throw PreconditionError("killing_implies_constant: Killing residual " + std::to_string(out.residual) +
                            " exceeds tolerance");
  const TorusGrid& tg = b.grid;
  const auto modes = vec_spectrum(b);
  const double slack = 64.0 * kEps * std::max(1.0, sup_norm(b));
  double worst = -1.0;
  out.ok = true;
  for (std::size_t k = 1; k < tg.size(); ++k) {
    const double amp = std::sqrt(std::norm(modes[0][k]) + std::norm(modes[1][k]) + std::norm(modes[2][k]));
    const auto j = tg.axis_indices(k);
    const double kn = norm3({static_cast<double>(tg.derivative_wavenumber(j[0])),
                             static_cast<double>(tg.derivative_wavenumber(j[1])),
                             static_cast<double>(tg.derivative_wavenumber(j[2]))});
    const double bound = (kn > 0.0 ? 3.0 * out.residual / (2.0 * std::sqrt(2.0) * std::numbers::pi * kn) : 0.0) + slack;
    if (amp > bound) out.ok = false;
    const double ratio = amp / bound;
    if (ratio > worst) {
      worst = ratio;
      out.mode_bound = bound;
    }
    out.max_mode = std::max(out.max_mode, amp);
  }
  out.b0 = torus_mean(b);
  return out;
}

Vec3 ampere_zero_current(const DistField& f) { return torus_mean(current(f)); }

GaussUniformity gauss_uniform_density(const DistField& f, const VecField& E, double rho_ion, double tol) {
  if (!(E.grid == f.torus())) throw GridMismatchError("gauss_uniform_density: E and f must share the torus grid");
  const ScalarField rho = density(f);
  const ScalarField div = divergence(E);
  GaussUniformity g;
  for (std::size_t x = 0; x < rho.values.size(); ++x) {
    g.density_deviation = std::max(g.density_deviation, std::abs(rho.values[x] - rho_ion));
    g.gauss_residual = std::max(g.gauss_residual, std::abs(div.values[x] - (rho.values[x] - rho_ion)));
  }
  g.supE = sup_norm(E);
  g.pass = g.density_deviation <= tol && g.supE <= tol && g.gauss_residual <= tol;
  return g;
}

ScoreBoundResult check_score_bound(const DistField& f, int K_max, double cap) {
  if (K_max < 0) throw PreconditionError("check_score_bound: K_max must be non-negative");
  if (!(f.min_value() > 0.0)) throw PreconditionError("check_score_bound: f must be positive");
  const VelocityGrid& vg = f.velocity();
  const std::size_t nv = vg.size();

  // Largest |score component| per velocity node over all torus nodes.
  std::vector<double> smax(nv, 0.0);
  const auto rep = slice_representatives(f);
  for (std::size_t x = 0; x < rep.size(); ++x) {
    if (rep[x] != x) continue;
    const auto s = log_gradient(vg, f.slice(x));
    for (std::size_t i = 0; i < nv; ++i)
      for (int a = 0; a < 3; ++a) smax[i] = std::max(smax[i], std::abs(s[a][i]));
  }

  ScoreBoundResult out;
  out.C_by_K.assign(K_max + 1, 0.0);
  for (std::size_t i = 0; i < nv; ++i) {
    const double base = 1.0 + speed(vg, i);
    double p = 1.0;
    for (int K = 0; K <= K_max; ++K) {
      out.C_by_K[K] = std::max(out.C_by_K[K], smax[i] / p);
      p *= base;
    }
  }

  // Shells of width h between L/2 and the inscribed radius.
  const double L = vg.half_width(), h = vg.spacing();
  std::map<long, double> shells;                   // shell -> max score
  std::map<long, std::pair<double, int>> radius;  // shell -> (radius sum, count)
  for (std::size_t i = 0; i < nv; ++i) {
    const double r = speed(vg, i);
    if (r < 0.5 * L || r > L - 0.5 * h) continue;
    const long s = static_cast<long>(std::floor(r / h));
    shells[s] = std::max(shells[s], smax[i]);
    auto& rr = radius[s];
    rr.first += r;
    rr.second += 1;
  }
  std::vector<double> xs, ys;
  for (const auto& [s, sh] : shells) {
    if (!(sh > 0.0)) continue;
    const auto& rr = radius[s];
    xs.push_back(std::log1p(rr.first / rr.second));
    ys.push_back(std::log(sh));
  }
  if (xs.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      mx += xs[k];
      my += ys[k];
    }
    mx /= xs.size();
    my /= xs.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sxy += (xs[k] - mx) * (ys[k] - my);
      sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    out.growth_exponent = sxx > 0.0 ? sxy / sxx : 0.0;
  }
  out.K_min = std::max(0, static_cast<int>(std::ceil(out.growth_exponent - 0.5)));

  for (int K = out.K_min; K <= K_max; ++K) {
    if (out.C_by_K[K] <= cap) {
      out.found = true;
      out.K = K;
      out.C = out.C_by_K[K];
      break;
    }
  }
  if (!out.found) {
    out.K = K_max;
    out.C = out.C_by_K[K_max];
  }
  return out;
}

std::vector<DecayOrder> check_decay(const DistField& f, std::span<const int> orders, double cap) {
  const VelocityGrid& vg = f.velocity();
  std::vector<double> fmax(vg.size(), 0.0);
  for (std::size_t x = 0; x < f.torus().size(); ++x) {
    const auto s = f.slice(x);
    for (std::size_t i = 0; i < s.size(); ++i) fmax[i] = std::max(fmax[i], std::abs(s[i]));
  }
  std::vector<DecayOrder> out;
  for (int m : orders) {
    if (m < 0) throw PreconditionError("check_decay: orders must be non-negative");
    DecayOrder d{m, 0.0, false};
    for (std::size_t i = 0; i < vg.size(); ++i) {
      const double r = speed(vg, i);
      if (r < 0.5 * vg.half_width()) continue;
      d.C = std::max(d.C, std::pow(1.0 + r, m) * fmax[i]);
    }
    d.pass = d.C <= cap;
    out.push_back(d);
  }
  return out;
}

std::string SevenStepReport::verdict() const {
  return failed_step == 0 ? "equilibrium" : "failed at step " + std::to_string(failed_step);
}

SevenStepReport proof_pipeline(const DistField& f, const VecField& E, const VecField& B, [[maybe_unused]] double nu,
                               double rho_ion, const PipelineTolerances& tol) {
  if (!(E.grid == f.torus()) || !(B.grid == f.torus()))
    throw GridMismatchError("proof_pipeline: fields and distribution must share the torus grid");
  if (!(f.min_value() > 0.0)) throw PreconditionError("proof_pipeline: f must be positive");
  const TorusGrid& tg = f.torus();
  const VelocityGrid& vg = f.velocity();
  const std::size_t nx = tg.size();
  const auto rep = slice_representatives(f);

  SevenStepReport r;
  auto fail = [&](int step) {
    r.failed_step = step;
    r.pass = false;
    return r;
  };

  // Step 1: D(f(x, .)) = 0 at every torus node.
  {
    auto& s = r.steps[0];
    s.evaluated = true;
    std::vector<Dissipation> d(nx);
    for (std::size_t x = 0; x < nx; ++x)
      if (rep[x] == x) d[x] = dissipation_terms(vg, f.slice(x));
    nlohmann::json values = nlohmann::json::array();
    double dmin = 0.0, worst = 0.0;
    s.pass = true;
    for (std::size_t x = 0; x < nx; ++x) {
      const Dissipation& dx = d[rep[x]];
      values.push_back(dx.value);
      dmin = std::min(dmin, dx.value);
      const double rel = dx.scale > 0.0 ? std::abs(dx.value) / dx.scale : std::abs(dx.value);
      worst = std::max(worst, rel);
      if (!(std::abs(dx.value) <= tol.dissipation * dx.scale) && dx.value != 0.0) s.pass = false;
    }
    s.detail = {{"D", values}, {"min", dmin}, {"max_relative", worst}, {"tol", tol.dissipation}};
    if (!s.pass) return fail(1);
  }

  // Step 2: log f is quadratic in v at every node.
  ScalarField c(tg);
  VecField b(tg);
  {
    auto& s = r.steps[1];
    s.evaluated = true;
    std::vector<LogQuadFit> fits(nx);
    for (std::size_t x = 0; x < nx; ++x)
      if (rep[x] == x) fits[x] = fit_log_quadratic(vg, f.slice(x));
    nlohmann::json res = nlohmann::json::array(), a = nlohmann::json::array(), bj = nlohmann::json::array(),
                   cj = nlohmann::json::array();
    double worst = 0.0;
    bool integrable = true;
    for (std::size_t x = 0; x < nx; ++x) {
      const LogQuadFit& fit = fits[rep[x]];
      worst = std::max(worst, fit.residual);
      if (!(fit.params.c < 0.0)) integrable = false;
      c.values[x] = fit.params.c;
      for (int k = 0; k < 3; ++k) b.components[k][x] = fit.params.b[k];
      res.push_back(fit.residual);
      a.push_back(fit.params.a);
      bj.push_back(vec_json(fit.params.b));
      cj.push_back(fit.params.c);
    }
    s.pass = worst <= tol.fit && integrable;
    s.detail = {{"max_residual", worst}, {"tol", tol.fit}, {"c_negative", integrable}, {"residual", res},
                {"a", a},          {"b", bj},           {"c", cj}};
    if (!s.pass) return fail(2);
  }

  // Step 3 has no standalone check; its consequences are tested in step 4.
  r.steps[2].evaluated = true;
  r.steps[2].pass = true;
  r.steps[2].detail = {{"standalone_check", false}, {"realized_by", "step4"}};

  // Step 4: grad c = 0 and Killing's equation for b.
  {
    auto& s = r.steps[3];
    s.evaluated = true;
    const double gc = temperature_uniformity(c);
    const double kr = killing_residual(b);
    s.pass = gc <= tol.grad_c && kr <= tol.killing;
    s.detail = {{"sup_grad_c", gc}, {"killing_residual", kr}, {"tol_grad_c", tol.grad_c}, {"tol_killing", tol.killing}};
    if (!s.pass) return fail(4);
  }

  // Step 5: Killing fields on the torus are constant.
  {
    auto& s = r.steps[4];
    s.evaluated = true;
    const KillingConstant k = killing_implies_constant(b, tol.killing);
    s.pass = k.ok;
    s.detail = {{"b0", vec_json(k.b0)}, {"nonconstant_mode_norm", k.max_mode}, {"mode_bound", k.mode_bound}};
    if (!s.pass) return fail(5);
  }

  // Step 6: zero total current, then uniform density and E = 0.
  {
    auto& s = r.steps[5];
    s.evaluated = true;
    const Vec3 J = ampere_zero_current(f);
    const double jn = norm3(J);
    s.detail = {{"total_current", vec_json(J)}, {"tol_current", tol.current}};
    if (!(jn <= tol.current)) {
      s.pass = false;
      return fail(6);
    }
    const GaussUniformity g = gauss_uniform_density(f, E, rho_ion, tol.gauss);
    s.detail["density_deviation"] = g.density_deviation;
    s.detail["supE"] = g.supE;
    s.detail["gauss_residual"] = g.gauss_residual;
    s.detail["tol_gauss"] = tol.gauss;
    s.pass = g.pass;
    if (!s.pass) return fail(6);
  }

  // Step 7: B harmonic, hence constant.
  {
    auto& s = r.steps[6];
    s.evaluated = true;
    const HarmonicReport h = harmonic_constant_check(B, tol.harmonic);
    s.pass = h.is_constant;
    s.detail = {{"curl_norm", h.curl_norm}, {"div_norm", h.div_norm}, {"max_mode", h.max_mode},
                {"mode_bound", h.mode_bound}, {"B0", vec_json(h.B0)}, {"tol", tol.harmonic}};
    if (!s.pass) return fail(7);
    r.B0 = h.B0;
  }

  r.T_eq = -1.0 / (2.0 * torus_mean(c));
  r.pass = r.T_eq > 0.0;
  return r;
}

void to_json(nlohmann::json& j, const SevenStepReport& r) {
  j = nlohmann::json::object();
  for (int k = 0; k < 7; ++k) {
    const StepResult& s = r.steps[k];
    nlohmann::json step = s.detail;
    step["evaluated"] = s.evaluated;
    step["pass"] = s.evaluated && s.pass;
    j["step" + std::to_string(k + 1)] = step;
  }
  j["verdict"] = r.verdict();
  j["pass"] = r.pass;
  j["failed_step"] = r.failed_step == 0 ? nlohmann::json(nullptr) : nlohmann::json(r.failed_step);
  j["T_eq"] = r.pass ? nlohmann::json(r.T_eq) : nlohmann::json(nullptr);
  j["B0"] = r.pass ? vec_json(r.B0) : nlohmann::json(nullptr);
}

HypothesisReport check_hypotheses(const DistField& f, const VecField& E, const VecField& B, double nu, double rho_ion,
                                  const HypothesisTolerances& tol) {
  if (!(E.grid == f.torus()) || !(B.grid == f.torus()))
    throw GridMismatchError("check_hypotheses: fields and distribution must share the torus grid");
  HypothesisReport r;
  auto set = [&](int k, const char* name, bool pass, bool proxy, nlohmann::json detail) {
    r.hyp[k - 1] = {name, pass, proxy, std::move(detail)};
  };
  const double fmin = f.min_value();
  const bool positive = fmin > 0.0;
  set(1, "nu_positive", nu > 0.0, false, {{"nu", nu}});
  set(2, "rho_ion_positive", rho_ion > 0.0, false, {{"rho_ion", rho_ion}});
  set(3, "f_positive", positive, false, {{"min_f", fmin}});

  const double d3 = third_difference_ratio(f);
  set(4, "f_smooth_v", d3 <= tol.third_difference, true, {{"third_difference_ratio", d3}, {"cap", tol.third_difference}});
  const double tail_f = spectral_tail(f.torus(), f.values(), f.velocity().size());
  set(5, "f_smooth_x", tail_f <= tol.spectral_tail, true, {{"spectral_tail", tail_f}, {"cap", tol.spectral_tail}});
  std::vector<double> bvals(3 * B.grid.size());
  for (std::size_t x = 0; x < B.grid.size(); ++x)
    for (int a = 0; a < 3; ++a) bvals[3 * x + a] = B.components[a][x];
  const double tail_b = spectral_tail(B.grid, bvals, 3);
  set(6, "B_smooth", tail_b <= tol.spectral_tail, true, {{"spectral_tail", tail_b}, {"cap", tol.spectral_tail}});

  r.decay = check_decay(f, tol.decay_orders);
  {
    nlohmann::json orders = nlohmann::json::array();
    bool pass = true;
    for (const auto& d : r.decay) {
      orders.push_back({{"m", d.m}, {"C", d.C}, {"pass", d.pass}});
      pass = pass && d.pass;
    }
    set(7, "schwartz_decay", pass, true, {{"orders", orders}, {"cap", kDecayCap}});
  }

  if (!positive) {
    const nlohmann::json skipped = {{"skipped", "f is not positive"}};
    set(8, "score_bound", false, false, skipped);
    set(9, "vlasov", false, false, skipped);
    set(10, "ampere", false, false, skipped);
    set(11, "gauss", false, false, skipped);
    set(12, "div_b", false, false, skipped);
    r.pass = false;
    return r;
  }

  r.score = check_score_bound(f, tol.K_max);
  set(8, "score_bound", r.score.found, false,
      {{"K", r.score.K}, {"C", r.score.C}, {"C_by_K", r.score.C_by_K}, {"growth_exponent", r.score.growth_exponent},
       {"K_min", r.score.K_min}, {"cap", kScoreCap}});
  if (r.score.found) {
    const VelocityGrid& vg = f.velocity();
    const int K = r.score.K + 1;
    double C = 0.0;
    for (std::size_t x = 0; x < f.torus().size(); ++x) {
      const auto s = f.slice(x);
      for (std::size_t i = 0; i < s.size(); ++i) C = std::max(C, std::abs(std::log(s[i])) / std::pow(1.0 + speed(vg, i), K));
    }
    r.hyp13 = {{"derived_from", "hyp8"}, {"K", K}, {"C", C}};
  } else {
    r.hyp13 = {{"derived_from", "hyp8"}, {"available", false}};
  }

  r.steady = steady_state_report(f, E, B, nu, rho_ion, tol.steady);
  auto norm_json = [](const ResidualNorm& n) { return nlohmann::json{{"sup", n.sup}, {"l2", n.l2}, {"tol", n.tol}}; };
  set(9, "vlasov", r.steady.vlasov.pass, false, norm_json(r.steady.vlasov));
  set(10, "ampere", r.steady.ampere.pass, false, norm_json(r.steady.ampere));
  set(11, "gauss", r.steady.gauss.pass, false, norm_json(r.steady.gauss));
  set(12, "div_b", r.steady.divb.pass, false, norm_json(r.steady.divb));

  r.pass = std::all_of(r.hyp.begin(), r.hyp.end(), [](const Hypothesis& h) { return h.pass; });
  return r;
}

void to_json(nlohmann::json& j, const HypothesisReport& r) {
  j = nlohmann::json::object();
  for (int k = 0; k < 12; ++k) {
    const Hypothesis& h = r.hyp[k];
    nlohmann::json e = h.detail;
    e["name"] = h.name;
    e["pass"] = h.pass;
    e["proxy"] = h.proxy;
    j["hyp" + std::to_string(k + 1)] = e;
  }
  j["hyp13"] = r.hyp13;
  j["steady_state"] = r.steady;
  j["pass"] = r.pass;
}

NonvacuousReport nonvacuous(double rho_ion, double T, const Vec3& B0, const NonvacuousSetup& setup) {
  if (!(rho_ion > 0.0) || !std::isfinite(rho_ion)) throw PreconditionError("nonvacuous: rho_ion must be positive");
  if (!(T > 0.0) || !std::isfinite(T)) throw PreconditionError("nonvacuous: T must be positive");
  const VelocityGrid vg = make_velocity_grid(setup.L, setup.N);
  const TorusGrid tg(setup.M);
  DistField f(tg, vg);
  const std::vector<double> m = sample_maxwellian(vg, {rho_ion, {0.0, 0.0, 0.0}, T});
  for (std::size_t x = 0; x < tg.size(); ++x) std::ranges::copy(m, f.slice(x).begin());
  const VecField E(tg);
  const VecField B(tg, B0);

  NonvacuousReport r;
  r.hypotheses = check_hypotheses(f, E, B, setup.nu, rho_ion, setup.hypotheses);
  r.pipeline = proof_pipeline(f, E, B, setup.nu, rho_ion, setup.pipeline);
  r.pass = r.hypotheses.pass && r.pipeline.pass;
  return r;
}

void to_json(nlohmann::json& j, const NonvacuousReport& r) {
  j = nlohmann::json::object();
  j["hypotheses"] = r.hypotheses;
  j["pipeline"] = r.pipeline;
  j["pass"] = r.pass;
}

}  // namespace vmlk
