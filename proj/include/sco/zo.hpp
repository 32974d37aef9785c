#pragma once

#include <optional>
#include <vector>

#include "sco/igm.hpp"
#include "sco/oracle.hpp"

namespace sco {

// Uniform sample of the unit 2-sphere in R^n.
Vec sample_sphere(int n, CounterRng& rng);

// g = (n/tau) * (eval(x + tau s) - eval(x)) * s, both values on one
// realization. Consumes 2 of the realization's queries.
Vec two_point_estimate(ZeroOrderOracle::Realization& r, const Vec& x, double tau, const Vec& s);

// One base value at x plus (k-1) directions sharing it; the averaged
// two-point estimators. Consumes k queries. Directions are sampled on the
// sphere unless an explicit set is supplied (e.g. coordinate axes).
Vec k_point_estimate(ZeroOrderOracle::Realization& r, const Vec& x, double tau, int k,
                     CounterRng& rng, const std::vector<Vec>* directions = nullptr);

// g = n * <grad f(x, xi), s> * s from one directional-oracle reply.
Vec directional_estimate(DirectionalOracle::Realization& r, const Vec& x, const Vec& s);

enum class ZoEstimator { two_point, k_point, directional };

struct ZOConfig {
  double p = 1.0;
  double L = 1.0;        // worst-case gradient Lipschitz constant
  double tau = 0.0;      // smoothing radius; 0 = auto c_tau * sqrt(delta/L)
  double c_tau = 1.0;
  int k = 2;             // queries per realization, in [2, n+1]
  long long batch = 0;   // realizations per iteration; 0 = auto round(n/k)
  double target_eps = 0.0;
  long long max_iters = 1000;
  long long max_calls = -1;
  double C = kDefaultC;
  ZoEstimator estimator = ZoEstimator::k_point;
  bool enforce_delta_tolerance = false;  // throw instead of warn + proceed
  bool run_pilot = true;                 // measure estimator bias/variance at x0
  bool measure_directional_L = false;    // direction-averaged curvature instead
                                         // of worst-case L for budget reporting
};

// Gradient-free run: feeds sphere-direction estimates into the igm scheme.
// Requires an interior optimum with vanishing gradient; checks the noise
// level against the applicable tolerance and warns (or refuses) beyond it.
RunRecord zo_run(const TestProblem& problem, const NoiseModel& noise, double D,
                 double noise_bound, const ProxSetup& setup, const ZOConfig& cfg,
                 std::uint64_t seed);

// Sampled direction-averaged gradient-Lipschitz constant:
// mean over (x, s) of |<grad f(x+ts) - grad f(x), s>| / t.
double directional_lipschitz_estimate(const TestProblem& problem, const ProxSetup& setup,
                                      int samples, double t, CounterRng& rng);

}  // namespace sco
