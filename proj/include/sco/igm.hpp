#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sco/oracle.hpp"
#include "sco/prox.hpp"
#include "sco/reductions.hpp"

namespace sco {

struct RunRow {
  long long k = 0;
  double gap = 0.0;
  long long calls = 0;
  long long walltime_ns = 0;
};

struct RunRecord {
  std::vector<RunRow> rows;
  Vec final_point;
  std::uint64_t seed = 0;
  long long total_calls = 0;
  long long iterations = 0;
  bool reached_target = false;
  double final_gap = 0.0;
  double A_final = 0.0;                // accumulated weight, for growth checks
  std::vector<double> accepted_L;      // universal variant diagnostics
  std::vector<std::string> warnings;
  std::string config_echo;
  long long wall_total_ns = 0;         // measured separately, never in rows
  double pilot_bias = 0.0;             // gradient-free runs: measured estimator bias at x0
  double pilot_variance = 0.0;         // and its per-realization variance

  // oracle calls at the first row whose gap is <= eps; -1 if never reached
  long long calls_to_reach(double eps) const;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IGMConfig {
  double p = 1.0;
  double L = 1.0;
  double target_eps = 0.0;   // 0 = run the full iteration budget
  long long max_iters = 1000;
  long long max_calls = -1;  // -1 = unlimited
  long long batch = 1;
  double delta_budget = 0.0;  // informational echo only
  Vec start;                  // empty = prox-center

  // universal variant
  double L0 = 1.0;
  int max_doublings = 60;

  std::function<void(long long, const Vec&, const Vec&, const Vec&)> observer;  // (k, y, z, xbar)
};

// Two-sequence scheme with weights a_{k+1} = (k+1)^p / (2^p L):
//   y_{k+1}    = (A_k xbar_k + a_{k+1} z_k) / A_{k+1}
//   z_{k+1}    = prox_step(z_k, G(y_{k+1}), a_{k+1})
//   xbar_{k+1} = (A_k xbar_k + a_{k+1} z_{k+1}) / A_{k+1}
// p = 0 starts as a plain mirror-descent step, p = 1 is the similar-triangles
// fast-gradient schedule.
RunRecord igm_core(const ProxSetup& setup, const IGMConfig& cfg,
                   const std::function<Vec(const Vec&)>& grad_at,
                   const std::function<double(const Vec&)>& gap_of,
                   const std::function<long long()>& calls_now);

RunRecord igm_run(FirstOrderOracle& oracle, const ProxSetup& setup, const IGMConfig& cfg);

struct RestartConfig {
  IGMConfig inner;
  double mu2 = 0.0;
  double D = 0.0;          // gradient variance, sizes per-stage batches
  double C = kDefaultC;
  long long batch_fixed = 0;  // 0 = auto per-stage batch from the variance term
  bool stop_on_target = true;  // false runs the full a-priori stage schedule
};

// Restart wrapper for mu2 > 0 on a euclidean prox: ceil(log2(mu2 R^2/eps))
// stages, each a fixed-length inner run recentred at the previous output,
// with per-stage batches growing so total calls track the variance term.
RunRecord igm_restart(FirstOrderOracle& oracle, const ProxSetup& setup, const RestartConfig& cfg);

// Smoothness-adaptive variant: per-iteration L found by doubling
// backtracking with the acceptance test
//   F(x') <= F(y) + <G(y), x'-y> + (L/2)||x'-y||^2 + (a/A)(eps/2),
// L halved after each acceptance. Every trial costs oracle calls.
RunRecord igm_universal(FirstOrderOracle& oracle, const ProxSetup& setup, const IGMConfig& cfg);

}  // namespace sco
