#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "vmlk/dist_field.hpp"
#include "vmlk/grid.hpp"
#include "vmlk/maxwell_eq.hpp"
#include "vmlk/vlasov.hpp"

namespace vmlk {

struct LogQuadFit {
  LogQuadParams params;
  /// sqrt(sum f_i r_i^2 / sum f_i) with r_i the misfit of log f_i.
  double residual = 0.0;
};

/// f-weighted least squares of log f onto {1, v1, v2, v3, |v|^2}.
/// Throws PreconditionError unless f > 0, Error on a rank-deficient system.
LogQuadFit fit_log_quadratic(const VelocityGrid& grid, std::span<const double> f);

/// sup over x of |grad c(x)|.
double temperature_uniformity(const ScalarField& c);

/// sup over i, j, x of |d_i b_j + d_j b_i|.
double killing_residual(const VecField& b);

struct KillingConstant {
  /// Every k != 0 mode of b is within the bound implied by the Killing residual.
  bool ok = false;
  Vec3 b0{0.0, 0.0, 0.0};
  double residual = 0.0;
  double max_mode = 0.0;
  double mode_bound = 0.0;
};

/// Requires killing_residual(b) <= tol (PreconditionError otherwise). A mode k
/// with k_i b_j + k_j b_i = 0 for all i, j has b = 0, so each |b_k| is bounded by
/// 3 R / (2 sqrt(2) pi |k|) where R is the residual; b0 is the mean of b.
KillingConstant killing_implies_constant(const VecField& b, double tol);

/// torus mean of int v f dv.
Vec3 ampere_zero_current(const DistField& f);

struct GaussUniformity {
  double density_deviation = 0.0;  // sup |rho - rho_ion|
  double supE = 0.0;
  double gauss_residual = 0.0;     // sup |div E - (rho - rho_ion)|
  bool pass = false;
};

GaussUniformity gauss_uniform_density(const DistField& f, const VecField& E, double rho_ion, double tol);

inline constexpr double kScoreCap = 1e3;
inline constexpr double kDecayCap = 1e3;

struct ScoreBoundResult {
  bool found = false;
  int K = 0;
  double C = 0.0;
  /// C(K) for K = 0..K_max.
  std::vector<double> C_by_K;
  /// Slope of log(shell max score) against log(1 + |v|) over |v| >= L/2.
  double growth_exponent = 0.0;
  /// Smallest K admissible for the observed growth, ceil(growth_exponent - 1/2).
  int K_min = 0;
};

/// C(K) = max over (x, v, i) of |d_{v_i} f| / ((1 + |v|)^K f), with the score
/// taken from grad_v(log f). A bound over the box says nothing about growth,
/// so K must also dominate the growth exponent seen on the outer shells; the
/// result is the smallest K >= K_min with C(K) <= cap.
ScoreBoundResult check_score_bound(const DistField& f, int K_max = 3, double cap = kScoreCap);

struct DecayOrder {
  int m = 0;
  double C = 0.0;
  bool pass = false;
};

/// C_m = max over x and over nodes with |v| >= L/2 of (1 + |v|)^m f.
std::vector<DecayOrder> check_decay(const DistField& f, std::span<const int> orders, double cap = kDecayCap);

struct PipelineTolerances {
  /// |D| <= dissipation * (dissipation scale) per torus node.
  double dissipation = 1e-10;
  double fit = 1e-6;
  double grad_c = 1e-6;
  double killing = 1e-6;
  double current = 1e-8;
  double gauss = 1e-6;
  double harmonic = 1e-6;
};

struct StepResult {
  bool evaluated = false;
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct SevenStepReport {
  std::array<StepResult, 7> steps;
  /// 1-based index of the first failing step, 0 when all pass.
  int failed_step = 0;
  double T_eq = 0.0;
  Vec3 B0{0.0, 0.0, 0.0};
  bool pass = false;

  std::string verdict() const;
};

SevenStepReport proof_pipeline(const DistField& f, const VecField& E, const VecField& B, double nu, double rho_ion,
                               const PipelineTolerances& tol = {});

void to_json(nlohmann::json& j, const SevenStepReport& r);

struct Hypothesis {
  std::string name;
  bool pass = false;
  /// Sample-based stand-in for a continuum property.
  bool proxy = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct HypothesisReport {
  std::array<Hypothesis, 12> hyp;
  /// Log-growth bound derived from the score bound, never checked on its own.
  nlohmann::json hyp13 = nlohmann::json::object();
  ScoreBoundResult score;
  std::vector<DecayOrder> decay;
  SteadyStateReport steady;
  bool pass = false;
};

struct HypothesisTolerances {
  SteadyStateTolerances steady;
  /// Largest admissible fraction of spectral energy in the upper half band.
  double spectral_tail = 1e-3;
  /// Largest admissible max |third difference quotient| / max f.
  double third_difference = 1e3;
  int K_max = 3;
  std::vector<int> decay_orders{2, 4, 8};
};

HypothesisReport check_hypotheses(const DistField& f, const VecField& E, const VecField& B, double nu, double rho_ion,
                                  const HypothesisTolerances& tol = {});

void to_json(nlohmann::json& j, const HypothesisReport& r);

struct NonvacuousReport {
  HypothesisReport hypotheses;
  SevenStepReport pipeline;
  bool pass = false;
};

struct NonvacuousSetup {
  double L = 6.0;
  int N = 16;
  int M = 8;
  double nu = 1.0;
  HypothesisTolerances hypotheses;
  PipelineTolerances pipeline;
};

/// Builds (M(rho_ion, 0, T), E = 0, B = B0) and runs every check on it.
NonvacuousReport nonvacuous(double rho_ion, double T, const Vec3& B0, const NonvacuousSetup& setup = {});

void to_json(nlohmann::json& j, const NonvacuousReport& r);

}  // namespace vmlk
