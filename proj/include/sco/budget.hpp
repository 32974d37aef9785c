#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sco/reductions.hpp"

namespace sco {

// One evaluated oracle-call bound. Real-valued terms are kept next to the
// ceiled integers so continuity properties can be checked without ceiling
// artifacts.
struct Budget {
  enum class Dominating { deterministic, variance };

  double calls_real = 0.0;
  double iters_real = 0.0;
  long long oracle_calls = 0;
  long long iterations = 0;
  long long batch = 1;
  double delta_max = 0.0;
  Dominating dominating = Dominating::deterministic;
  double C = kDefaultC;

  double det_term = 0.0;  // deterministic branch of the max, real-valued
  double var_term = 0.0;  // variance branch of the max, real-valued

  std::optional<double> argmin_nu;          // set by cor1
  std::optional<double> iters_alt_display;  // strongly convex case: the
                                            // L2-argument log variant
  bool display_mismatch = false;            // alt display disagrees with iterations
};

// Smooth convex case:
//   calls = max{ C (L R^2/eps)^{1/(p+1)}, C D R^2/eps^2 },
//   delta_max = eps (eps/(L R^2))^{p/(p+1)} / C,
//   iterations = C (L R^2/eps)^{1/(p+1)}.
Budget thm1_budget(double p, double L, double R, double D, double eps, double C = kDefaultC);

// Smooth strongly convex case:
//   calls = max{ C (L2/mu2)^{1/(p+1)} ceil(ln(mu2 R2^2/eps)), C D2/(mu2 eps) },
//   delta_max = eps (mu2/L2)^{p/(p+1)} / C.
// The source prints two log arguments for the iteration count (mu2 R2^2/eps
// in the call bound, L2 R2^2/eps in the iteration display); `iterations`
// uses the former, the latter is reported as iters_alt_display and the
// mismatch flagged.
Budget thm1_sc_budget(double p, double L2, double mu2, double D2, double R2, double eps,
                      double C = kDefaultC);

// Iteration count once the model carries an M-term. Convex case:
//   C (L R^2/eps)^{1/(p+1)} + C M^2 R^2 / eps^2;
// strongly convex analogue uses C (L2/mu2)^{1/(p+1)} ln(L2 R2^2/eps) + C M^2/(mu2 eps).
struct IterationPair {
  double smooth_term = 0.0;
  double m_term = 0.0;
  double total = 0.0;
};
IterationPair remark3_iterations(double p, double L, double R, double M, double eps,
                                 std::optional<double> mu2 = std::nullopt, double C = kDefaultC);

// Universal (smoothness-adaptive) bound. Convex case minimizes
//   C (L_nu R^{1+nu}/eps)^{2/(1+2 p nu + nu)}
// over the provided Holder profile (evaluated on a 0.01 nu-grid across the
// given pairs); strongly convex case uses the
//   C (L_nu2^{1+nu}/(mu2 eps^{1+nu}))^{(1+nu)/(1+2 p nu + nu)} ceil(ln(mu2 R2^2/eps))
// display. delta_max = eps / (C N^p).
struct HolderPoint {
  double nu = 1.0;
  double L_nu = 1.0;
};
Budget cor1_budget(double p, const std::vector<HolderPoint>& profile, double R, double eps,
                   double C = kDefaultC, std::optional<double> mu2 = std::nullopt);

// Non-adaptive Holder bound with a stochastic term:
//   calls = max{ N1bar, C D R^2/eps^2 },  delta_max = eps / (C N1bar^p),
// where N1bar is the single-nu deterministic term of cor1.
Budget cor2_budget(double p, double nu, double L_nu, double R, double D, double eps,
                   double C = kDefaultC, std::optional<double> mu2 = std::nullopt,
                   double D2 = 0.0);

// Gradient-free (function-value) oracle: first-order budget with calls
// scaled by n, delta_max by 1/n, iterations by n/k.
Budget thm2_budget(double p, int n, double L, double R, double D, double eps, double C, int k,
                   std::optional<double> mu2 = std::nullopt);

// Directional-derivative oracle: same call/iteration structure as thm2,
// delta_max = sqrt( (L/n) * eps (eps/(L R^2))^{p/(p+1)} / C )  (mu2 variant
// replaces the inner factor by (mu2/L2)^{p/(p+1)}).
Budget thm3_budget(double p, int n, double L, double R, double D, double eps, double C, int k,
                   std::optional<double> mu2 = std::nullopt);

// Calls needed for the (1-sigma)-confidence regime: N * ceil(ln(1/(sigma eps))).
long long high_prob_calls(double N_eps, double sigma, double eps);

// Uniformly convex objective: embed via uniform_to_strong and reuse the
// strongly convex budget.
Budget uniform_convex_budget(double p, double rho, double kappa_rho, double delta, double L2,
                             double D2, double R2, double eps, double C = kDefaultC);

}  // namespace sco
