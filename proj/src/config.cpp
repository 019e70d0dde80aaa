#include "vmlk/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace vmlk {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view s) {
  std::istringstream is{std::string(s)};
  double x = 0.0;
  is >> x;
  if (is.fail() || !is.eof() || !std::isfinite(x)) throw PreconditionError("expected a finite number, got '" + std::string(s) + "'");
  return x;
}

long long to_integer(std::string_view s) {
  long long x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size()) throw PreconditionError("expected an integer, got '" + std::string(s) + "'");
  return x;
}

Vec3 to_vec3(std::string_view s) {
  Vec3 v{};
  int k = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const auto part = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (k == 3) throw PreconditionError("expected three comma-separated numbers");
    v[k++] = to_double(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (k != 3) throw PreconditionError("expected three comma-separated numbers");
  return v;
}

void positive(double x, const char* what) {
  if (!(x > 0.0)) throw PreconditionError(std::string(what) + " must be positive");
}

void non_negative(double x, const char* what) {
  if (!(x >= 0.0)) throw PreconditionError(std::string(what) + " must be non-negative");
}

using Setter = std::function<void(ScenarioConfig&, std::string_view)>;

Setter tolerance(double& (*field)(ScenarioConfig&), const char* name) {
  return [field, name](ScenarioConfig& c, std::string_view v) {
    const double x = to_double(v);
    non_negative(x, name);
    field(c) = x;
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"L", [](ScenarioConfig& c, std::string_view v) { c.L = to_double(v); positive(c.L, "L"); }},
      {"N",
       [](ScenarioConfig& c, std::string_view v) {
         const long long n = to_integer(v);
         if (n < 4 || n % 2 != 0 || n > 256) throw PreconditionError("N must be even ≥ 4");
         c.N = static_cast<int>(n);
       }},
      {"M",
       [](ScenarioConfig& c, std::string_view v) {
         const long long m = to_integer(v);
         if (m < 2 || m > 256) throw PreconditionError("M must be between 2 and 256");
         c.M = static_cast<int>(m);
       }},
      {"nu", [](ScenarioConfig& c, std::string_view v) { c.nu = to_double(v); non_negative(c.nu, "nu"); }},
      {"rho_ion", [](ScenarioConfig& c, std::string_view v) { c.rho_ion = to_double(v); positive(c.rho_ion, "rho_ion"); }},
      {"T_ref", [](ScenarioConfig& c, std::string_view v) { c.T_ref = to_double(v); positive(c.T_ref, "T_ref"); }},
      {"B0", [](ScenarioConfig& c, std::string_view v) { c.B0 = to_vec3(v); }},
      {"dt", [](ScenarioConfig& c, std::string_view v) { c.dt = to_double(v); positive(c.dt, "dt"); }},
      {"t_end", [](ScenarioConfig& c, std::string_view v) { c.t_end = to_double(v); non_negative(c.t_end, "t_end"); }},
      {"record_every",
       [](ScenarioConfig& c, std::string_view v) {
         const long long r = to_integer(v);
         if (r < 1) throw PreconditionError("record_every must be at least 1");
         c.record_every = static_cast<int>(r);
       }},
      {"seed",
       [](ScenarioConfig& c, std::string_view v) {
         const long long s = to_integer(v);
         if (s < 0) throw PreconditionError("seed must be non-negative");
         c.seed = static_cast<std::uint64_t>(s);
       }},
      {"initial",
       [](ScenarioConfig& c, std::string_view v) {
         if (v != "bimaxwellian" && v != "maxwellian" && v != "random" && v != "perturbed")
           throw PreconditionError("initial must be bimaxwellian, maxwellian, random or perturbed");
         c.initial = v;
       }},
      {"maxwellian",
       [](ScenarioConfig& c, std::string_view v) {
         c.maxwellian = parse_maxwellian_params(v);
         validate(*c.maxwellian);
       }},
      {"amplitude",
       [](ScenarioConfig& c, std::string_view v) {
         c.amplitude = to_double(v);
         if (!(std::abs(c.amplitude) < 1.0)) throw PreconditionError("amplitude must lie in (-1, 1)");
       }},
      {"candidate",
       [](ScenarioConfig& c, std::string_view v) {
         if (v != "equilibrium" && v != "drifting" && v != "varying_T" && v != "nonharmonic_B")
           throw PreconditionError("candidate must be equilibrium, drifting, varying_T or nonharmonic_B");
         c.candidate = v;
       }},
      {"E_file", [](ScenarioConfig& c, std::string_view v) { c.E_file = v; }},
      {"B_file", [](ScenarioConfig& c, std::string_view v) { c.B_file = v; }},
      {"out", [](ScenarioConfig& c, std::string_view v) { c.out = v; }},
      {"bench_N",
       [](ScenarioConfig& c, std::string_view v) {
         const long long n = to_integer(v);
         if (n < 4 || n % 2 != 0 || n > 64) throw PreconditionError("bench_N must be even, between 4 and 64");
         c.bench_N = static_cast<int>(n);
       }},
      {"bench_repeats",
       [](ScenarioConfig& c, std::string_view v) {
         const long long n = to_integer(v);
         if (n < 1) throw PreconditionError("bench_repeats must be at least 1");
         c.bench_repeats = static_cast<int>(n);
       }},
      {"K_max",
       [](ScenarioConfig& c, std::string_view v) {
         const long long k = to_integer(v);
         if (k < 0 || k > 16) throw PreconditionError("K_max must be between 0 and 16");
         c.hypotheses.K_max = static_cast<int>(k);
       }},
      {"tol_vlasov", tolerance([](ScenarioConfig& c) -> double& { return c.steady.vlasov; }, "tol_vlasov")},
      {"tol_ampere", tolerance([](ScenarioConfig& c) -> double& { return c.steady.ampere; }, "tol_ampere")},
      {"tol_divb", tolerance([](ScenarioConfig& c) -> double& { return c.steady.divb; }, "tol_divb")},
      {"tol_curle", tolerance([](ScenarioConfig& c) -> double& { return c.steady.curle; }, "tol_curle")},
      {"tol_gauss",
       [](ScenarioConfig& c, std::string_view v) {
         const double x = to_double(v);
         non_negative(x, "tol_gauss");
         c.steady.gauss = x;
         c.pipeline.gauss = x;
       }},
      {"tol_dissipation", tolerance([](ScenarioConfig& c) -> double& { return c.pipeline.dissipation; }, "tol_dissipation")},
      {"tol_fit", tolerance([](ScenarioConfig& c) -> double& { return c.pipeline.fit; }, "tol_fit")},
      {"tol_grad_c", tolerance([](ScenarioConfig& c) -> double& { return c.pipeline.grad_c; }, "tol_grad_c")},
      {"tol_killing", tolerance([](ScenarioConfig& c) -> double& { return c.pipeline.killing; }, "tol_killing")},
      {"tol_current", tolerance([](ScenarioConfig& c) -> double& { return c.pipeline.current; }, "tol_current")},
      {"tol_harmonic", tolerance([](ScenarioConfig& c) -> double& { return c.pipeline.harmonic; }, "tol_harmonic")},
      {"tol_spectral_tail",
       tolerance([](ScenarioConfig& c) -> double& { return c.hypotheses.spectral_tail; }, "tol_spectral_tail")},
  };
  return table;
}

}  // namespace

ScenarioConfig parse_config_text(std::string_view text, const std::string& source) {
  ScenarioConfig cfg;
  bool has_L = false;
  std::map<std::string, int, std::less<>> seen;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + std::string(key) + "'");
    if (auto s = seen.find(key); s != seen.end())
      throw ConfigError(where + "duplicate key '" + std::string(key) + "' (first set on line " + std::to_string(s->second) + ")");
    seen.emplace(std::string(key), lineno);
    if (value.empty()) throw ConfigError(where + "missing value for '" + std::string(key) + "'");
    try {
      it->second(cfg, value);
    } catch (const Error& e) {
      throw ConfigError(where + e.what());
    }
    if (key == "L") has_L = true;
  }
  if (!has_L) cfg.L = 6.0 * std::sqrt(cfg.T_ref);
  return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open configuration file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

}  // namespace vmlk
