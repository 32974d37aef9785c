#include "sco/zo.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sco/budget.hpp"

namespace sco {

Vec sample_sphere(int n, CounterRng& rng) {
  for (;;) {
    Vec g = rng.gaussian_vec(n);
    const double r = norm2(g);
    if (r > 1e-12) return scaled(g, 1.0 / r);
  }
}

Vec two_point_estimate(ZeroOrderOracle::Realization& r, const Vec& x, double tau, const Vec& s) {
  if (tau <= 0) throw std::invalid_argument("two_point_estimate: tau must be positive");
  const int n = static_cast<int>(x.size());
  const double fwd = r.eval(combine(1.0, x, tau, s));
  const double base = r.eval(x);
  return scaled(s, n / tau * (fwd - base));
}

Vec k_point_estimate(ZeroOrderOracle::Realization& r, const Vec& x, double tau, int k,
                     CounterRng& rng, const std::vector<Vec>* directions) {
  const int n = static_cast<int>(x.size());
  if (k < 2 || k > n + 1) throw std::invalid_argument("k_point_estimate: k must lie in [2, n+1]");
  if (k > r.queries_left()) throw std::runtime_error("k_point_estimate: realization capacity too small");
  if (tau <= 0) throw std::invalid_argument("k_point_estimate: tau must be positive");
  const double base = r.eval(x);
  Vec g(n, 0.0);
  for (int j = 0; j < k - 1; ++j) {
    const Vec s = directions ? directions->at(j) : sample_sphere(n, rng);
    const double fwd = r.eval(combine(1.0, x, tau, s));
    axpy(n / tau * (fwd - base), s, g);
  }
  return scaled(g, 1.0 / (k - 1));
}

Vec directional_estimate(DirectionalOracle::Realization& r, const Vec& x, const Vec& s) {
  const int n = static_cast<int>(x.size());
  return scaled(s, n * r.query(x, s));
}

double directional_lipschitz_estimate(const TestProblem& problem, const ProxSetup& setup,
                                      int samples, double t, CounterRng& rng) {
  double acc = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec x = sample_in(setup, rng);
    const Vec s = sample_sphere(setup.dim, rng);
    const Vec gx = problem.grad(x);
    const Vec gt = problem.grad(combine(1.0, x, t, s));
    acc += std::fabs(dot(sub(gt, gx), s)) / t;
  }
  return acc / samples;
}

namespace {

double auto_tau(const ZOConfig& cfg, const NoiseModel& noise, double R) {
  if (cfg.tau > 0) return cfg.tau;
  if (noise.delta > 0) return cfg.c_tau * std::sqrt(noise.delta / cfg.L);
  // cancellation floor when the oracle is exact
  const double eps_mach = std::numeric_limits<double>::epsilon();
  return std::sqrt(eps_mach * cfg.L * R * R) / cfg.L;
}

}  // namespace

RunRecord zo_run(const TestProblem& problem, const NoiseModel& noise, double D,
                 double noise_bound, const ProxSetup& setup, const ZOConfig& cfg,
                 std::uint64_t seed) {
  const int n = problem.dim;
  if (cfg.k < 2 || cfg.k > n + 1) throw SolverError("zo_run: k must lie in [2, n+1]");

  // the analysis needs grad f(x*) = 0 at an interior optimum
  if (norm2(problem.grad(problem.x_star)) > 1e-9)
    throw SolverError("zo_run: problem optimum has a nonvanishing gradient");
  if (!strictly_inside(setup, problem.x_star, 1e-9))
    throw SolverError("zo_run: problem optimum lies on the boundary of Q");

  RunRecord rec;

  // noise tolerance of the applicable bound at the target accuracy
  if (cfg.target_eps > 0 && noise.delta > 0) {
    const Budget b = cfg.estimator == ZoEstimator::directional
                         ? thm3_budget(cfg.p, n, cfg.L, setup.R, D, cfg.target_eps, cfg.C, cfg.k)
                         : thm2_budget(cfg.p, n, cfg.L, setup.R, D, cfg.target_eps, cfg.C, cfg.k);
    if (noise.delta > b.delta_max) {
      std::ostringstream os;
      os << "noise level " << noise.delta << " exceeds the admissible " << b.delta_max
         << " for eps=" << cfg.target_eps;
      if (cfg.enforce_delta_tolerance) throw SolverError("zo_run: " + os.str());
      rec.warnings.push_back(os.str());
    }
  }

  const double tau = auto_tau(cfg, noise, setup.R);
  const long long batch =
      cfg.batch > 0 ? cfg.batch
                    : std::max<long long>(1, static_cast<long long>(std::llround(
                                                 static_cast<double>(n) / cfg.k)));
  const int k_eff = cfg.estimator == ZoEstimator::two_point ? 2 : cfg.k;

  CounterRng dir_rng(seed, CounterRng::stream_id(1, "zo-directions"));

  ZeroOrderOracle zo(problem, noise, D, noise_bound, k_eff, seed,
                     CounterRng::stream_id(1, "zo-oracle"));
  DirectionalOracle dir(problem, noise, D, noise_bound, k_eff, seed,
                        CounterRng::stream_id(1, "dir-oracle"));
  const bool directional = cfg.estimator == ZoEstimator::directional;

  auto one_estimate = [&](const Vec& y) {
    if (directional) {
      auto h = dir.open();
      Vec g(n, 0.0);
      for (int j = 0; j < k_eff; ++j) {
        const Vec s = sample_sphere(n, dir_rng);
        axpy(1.0, directional_estimate(h, y, s), g);
      }
      return scaled(g, 1.0 / k_eff);
    }
    auto h = zo.open();
    return k_point_estimate(h, y, tau, k_eff, dir_rng);
  };

  // pilot measurement of the estimator moments at x0 (separate oracle so the
  // run's call accounting stays exact)
  if (cfg.run_pilot) {
    ZeroOrderOracle pilot_zo(problem, noise, D, noise_bound, k_eff, seed,
                             CounterRng::stream_id(2, "zo-pilot"));
    DirectionalOracle pilot_dir(problem, noise, D, noise_bound, k_eff, seed,
                                CounterRng::stream_id(2, "dir-pilot"));
    CounterRng pilot_rng(seed, CounterRng::stream_id(2, "pilot-directions"));
    const Vec x0 = setup.center;
    const Vec g_true = problem.grad(x0);
    const int pilots = 64;
    Vec mean(n, 0.0);
    std::vector<Vec> draws;
    draws.reserve(pilots);
    for (int i = 0; i < pilots; ++i) {
      Vec g;
      if (directional) {
        auto h = pilot_dir.open();
        g = Vec(n, 0.0);
        for (int j = 0; j < k_eff; ++j) {
          const Vec s = sample_sphere(n, pilot_rng);
          axpy(1.0, directional_estimate(h, x0, s), g);
        }
        g = scaled(g, 1.0 / k_eff);
      } else {
        auto h = pilot_zo.open();
        g = k_point_estimate(h, x0, tau, k_eff, pilot_rng);
      }
      axpy(1.0, g, mean);
      draws.push_back(std::move(g));
    }
    mean = scaled(mean, 1.0 / pilots);
    rec.pilot_bias = norm_dual(setup, sub(mean, g_true));
    double var = 0.0;
    for (const auto& g : draws) {
      const Vec d = sub(g, mean);
      var += dot(d, d);
    }
    rec.pilot_variance = var / pilots;
  }

  IGMConfig inner;
  inner.p = cfg.p;
  inner.L = cfg.L;
  inner.target_eps = cfg.target_eps;
  inner.max_iters = cfg.max_iters;
  inner.max_calls = cfg.max_calls;

  auto grad_at = [&](const Vec& y) {
    Vec g(n, 0.0);
    for (long long r = 0; r < batch; ++r) axpy(1.0, one_estimate(y), g);
    return scaled(g, 1.0 / static_cast<double>(batch));
  };
  auto gap_of = [&](const Vec& x) { return problem.gap(x); };
  auto calls = [&]() {
    return directional ? dir.counter().total_calls : zo.counter().total_calls;
  };

  RunRecord core = igm_core(setup, inner, grad_at, gap_of, calls);
  core.warnings.insert(core.warnings.end(), rec.warnings.begin(), rec.warnings.end());
  core.pilot_bias = rec.pilot_bias;
  core.pilot_variance = rec.pilot_variance;
  core.seed = seed;
  return core;
}

}  // namespace sco
