#include "vmlk/maxwell_eq.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace vmlk {
namespace {

double norm2(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_number(const std::string& token, std::string_view key) {
  try {
    std::size_t used = 0;
    const double x = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw PreconditionError("maxwellian parameters: malformed value '" + token + "' for " + std::string(key));
  }
}

}  // namespace

void validate(const MaxwellianParams& p) {
  if (!(p.rho > 0.0) || !std::isfinite(p.rho)) throw PreconditionError("maxwellian: rho must be positive");
  if (!(p.T > 0.0) || !std::isfinite(p.T)) throw PreconditionError("maxwellian: T must be positive");
  for (double x : p.u)
    if (!std::isfinite(x)) throw PreconditionError("maxwellian: u must be finite");
}

double equilibrium_maxwellian(double rho_ion, double T, const Vec3& v) {
  if (!(rho_ion > 0.0)) throw PreconditionError("equilibrium_maxwellian: rho_ion must be positive");
  if (!(T > 0.0)) throw PreconditionError("equilibrium_maxwellian: T must be positive");
  return rho_ion * std::pow(2.0 * std::numbers::pi * T, -1.5) * std::exp(-norm2(v) / (2.0 * T));
}

double maxwellian(const MaxwellianParams& p, const Vec3& v) {
  validate(p);
  const Vec3 w{v[0] - p.u[0], v[1] - p.u[1], v[2] - p.u[2]};
  return p.rho * std::pow(2.0 * std::numbers::pi * p.T, -1.5) * std::exp(-norm2(w) / (2.0 * p.T));
}

double local_maxwellian(const LogQuadParams& p, const Vec3& v) {
  if (!(p.c < 0.0)) throw PreconditionError("local_maxwellian: c must be negative");
  return std::exp(p.a + p.b[0] * v[0] + p.b[1] * v[1] + p.b[2] * v[2] + p.c * norm2(v));
}

LogQuadParams to_log_quad(const MaxwellianParams& p) {
  validate(p);
  LogQuadParams q;
  q.c = -1.0 / (2.0 * p.T);
  for (int a = 0; a < 3; ++a) q.b[a] = p.u[a] / p.T;
  q.a = std::log(p.rho) - 1.5 * std::log(2.0 * std::numbers::pi * p.T) - norm2(p.u) / (2.0 * p.T);
  return q;
}

MaxwellianParams from_log_quad(const LogQuadParams& q) {
  if (!(q.c < 0.0)) throw PreconditionError("from_log_quad: c must be negative");
  MaxwellianParams p;
  p.T = -1.0 / (2.0 * q.c);
  for (int a = 0; a < 3; ++a) p.u[a] = -q.b[a] / (2.0 * q.c);
  p.rho = std::exp(q.a + 1.5 * std::log(2.0 * std::numbers::pi * p.T) + norm2(p.u) / (2.0 * p.T));
  return p;
}

std::vector<double> sample_maxwellian(const VelocityGrid& grid, const MaxwellianParams& p) {
  validate(p);
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = maxwellian(p, grid.velocity(i));
  return f;
}

MaxwellianParams moments(const VelocityGrid& grid, std::span<const double> f) {
  if (f.size() != grid.size()) throw GridMismatchError("moments: sample count does not match grid");
  double rho = 0.0;
  Vec3 mom{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < f.size(); ++i) {
    rho += f[i];
    for (int a = 0; a < 3; ++a) mom[a] += grid.coords(a)[i] * f[i];
  }
  const double w = grid.weight();
  rho *= w;
  if (!(rho > kDegenerateDensity)) throw DegenerateDensityError("moments: density is degenerate (rho <= 1e-12)");

  MaxwellianParams p;
  p.rho = rho;
  for (int a = 0; a < 3; ++a) p.u[a] = w * mom[a] / rho;
  double second = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double d2 = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double d = grid.coords(a)[i] - p.u[a];
      d2 += d * d;
    }
    second += d2 * f[i];
  }
  p.T = w * second / (3.0 * rho);
  return p;
}

MaxwellianParams parse_maxwellian_params(std::string_view text) {
  std::map<std::string, std::vector<std::string>> fields;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string token = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (const auto eq = token.find('='); eq != std::string::npos) {
      current = trim(token.substr(0, eq));
      if (fields.contains(current)) throw PreconditionError("maxwellian parameters: duplicate key '" + current + "'");
      fields[current].push_back(trim(token.substr(eq + 1)));
    } else if (!current.empty() && !token.empty()) {
      fields[current].push_back(token);
    } else if (!token.empty()) {
      throw PreconditionError("maxwellian parameters: value '" + token + "' without a key");
    }
  }

  MaxwellianParams p;
  for (const auto& [key, values] : fields) {
    if (key == "rho" || key == "T") {
      if (values.size() != 1) throw PreconditionError("maxwellian parameters: " + key + " takes one value");
      (key == "rho" ? p.rho : p.T) = parse_number(values[0], key);
    } else if (key == "u") {
      if (values.size() != 3) throw PreconditionError("maxwellian parameters: u takes three values");
      for (int a = 0; a < 3; ++a) p.u[a] = parse_number(values[a], key);
    } else {
      throw PreconditionError("maxwellian parameters: unknown key '" + key + "'");
    }
  }
  for (const char* k : {"rho", "u", "T"})
    if (!fields.contains(k)) throw PreconditionError(std::string("maxwellian parameters: missing ") + k);
  validate(p);
  return p;
}

}  // namespace vmlk
