#include "vmlk/vlasov.hpp"

#include <algorithm>
#include <cmath>

#include "vmlk/fields.hpp"
#include "vmlk/landau.hpp"

namespace vmlk {
namespace {

void require_shared(const DistField& f, const VecField& E, const VecField& B, const char* who) {
  if (!(E.grid == f.torus()) || !(B.grid == f.torus()))
    throw GridMismatchError(std::string(who) + ": fields and distribution must share the torus grid");
}

ResidualNorm scalar_norm(const ScalarField& s, double tol) {
  ResidualNorm n{sup_norm(s), l2_norm(s), tol, false};
  n.pass = n.sup <= tol;
  return n;
}

ResidualNorm vector_norm(const VecField& v, double tol) {
  ResidualNorm n{sup_norm(v), l2_norm(v), tol, false};
  n.pass = n.sup <= tol;
  return n;
}

}  // namespace

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 lorentz(const Vec3& E, const Vec3& B, const Vec3& v) {
  const Vec3 vb = cross(v, B);
  return {E[0] + vb[0], E[1] + vb[1], E[2] + vb[2]};
}

std::vector<double> vlasov_residual(const DistField& f, const VecField& E, const VecField& B, double nu) {
  require_shared(f, E, B, "vlasov_residual");
  if (!(f.min_value() > 0.0)) throw PreconditionError("vlasov_residual: f must be positive at every node");

  const TorusGrid& tg = f.torus();
  const VelocityGrid& vg = f.velocity();
  const std::size_t nv = vg.size();
  std::vector<double> r = transport_term(f);

  const auto rep = slice_representatives(f);
  std::vector<std::array<std::vector<double>, 3>> scores(tg.size());
  std::vector<std::vector<double>> q(tg.size());
  for (std::size_t x = 0; x < tg.size(); ++x) {
    if (rep[x] != x) continue;
    scores[x] = log_gradient(vg, f.slice(x));
    if (nu != 0.0) q[x] = collision_Q(vg, f.slice(x)).Q;
  }

  for (std::size_t x = 0; x < tg.size(); ++x) {
    const auto& s = scores[rep[x]];
    const Vec3 e = E.at(x), b = B.at(x);
    const auto fx = f.slice(x);
    double* rx = r.data() + x * nv;
    for (std::size_t i = 0; i < nv; ++i) {
      const Vec3 a = lorentz(e, b, {vg.coords(0)[i], vg.coords(1)[i], vg.coords(2)[i]});
      rx[i] += fx[i] * (a[0] * s[0][i] + a[1] * s[1][i] + a[2] * s[2][i]);
      if (nu != 0.0) rx[i] -= nu * q[rep[x]][i];
    }
  }
  return r;
}

MaxwellResiduals maxwell_residuals(const DistField& f, const VecField& E, const VecField& B, double rho_ion) {
  require_shared(f, E, B, "maxwell_residuals");
  const ScalarField rho = density(f);
  const VecField j = current(f);
  MaxwellResiduals out;
  out.ampere = curl(B);
  for (int a = 0; a < 3; ++a)
    for (std::size_t x = 0; x < j.grid.size(); ++x) out.ampere.components[a][x] -= j.components[a][x];
  out.gauss = divergence(E);
  for (std::size_t x = 0; x < rho.grid.size(); ++x) out.gauss.values[x] -= rho.values[x] - rho_ion;
  out.divB = divergence(B);
  out.curlE = curl(E);
  return out;
}

SteadyStateReport steady_state_report(const DistField& f, const VecField& E, const VecField& B, double nu,
                                      double rho_ion, const SteadyStateTolerances& tol) {
  const std::vector<double> r = vlasov_residual(f, E, B, nu);
  const MaxwellResiduals m = maxwell_residuals(f, E, B, rho_ion);

  SteadyStateReport rep;
  double sup = 0.0, sq = 0.0;
  for (double x : r) {
    sup = std::max(sup, std::abs(x));
    sq += x * x;
  }
  rep.vlasov = {sup, std::sqrt(sq * f.velocity().weight() / static_cast<double>(f.torus().size())), tol.vlasov,
                false};
  rep.vlasov.pass = rep.vlasov.sup <= tol.vlasov;
  rep.ampere = vector_norm(m.ampere, tol.ampere);
  rep.gauss = scalar_norm(m.gauss, tol.gauss);
  rep.divb = scalar_norm(m.divB, tol.divb);
  rep.curle = vector_norm(m.curlE, tol.curle);
  rep.pass = rep.vlasov.pass && rep.ampere.pass && rep.gauss.pass && rep.divb.pass;
  return rep;
}

void to_json(nlohmann::json& j, const SteadyStateReport& r) {
  auto put = [&](const char* key, const ResidualNorm& n) {
    j[std::string(key) + "_sup"] = n.sup;
    j[std::string(key) + "_l2"] = n.l2;
    j[std::string(key) + "_tol"] = n.tol;
    j[std::string(key) + "_pass"] = n.pass;
  };
  j = nlohmann::json::object();
  put("vlasov", r.vlasov);
  put("ampere", r.ampere);
  put("gauss", r.gauss);
  put("divb", r.divb);
  put("curle", r.curle);
  j["pass"] = r.pass;
}

}  // namespace vmlk
