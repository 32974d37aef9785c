#include "sco/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sco/reductions.hpp"

namespace sco {

BiasField::BiasField(const ProxSetup& setup, double delta, BiasKind kind, double bias_scale,
                     std::uint64_t seed) {
  delta_ = delta;
  kind_ = delta > 0 ? kind : BiasKind::none;
  center_ = setup.center;
  if (kind_ == BiasKind::none) return;
  const double R = std::max(setup.R, 1e-12);
  q_ = std::min(R, 1.0 / R) * bias_scale;
  CounterRng rng(seed, CounterRng::stream_id(0, "bias-field-w"));
  Vec g = rng.gaussian_vec(setup.dim);
  const double r = norm2(g);
  w_ = r > 0 ? scaled(g, 1.0 / r) : unit(setup.dim, 0);
}

double BiasField::value(const Vec& x) const {
  if (kind_ == BiasKind::none) return 0.0;
  return delta_ * std::sin(q_ * dot(w_, sub(x, center_)));
}

FirstOrderOracle::FirstOrderOracle(TestProblem problem, NoiseModel noise, double D,
                                   double noise_bound, std::uint64_t seed, std::uint64_t stream)
    : problem_(std::move(problem)),
      noise_(noise),
      family_(stochastic_wrapper(problem_, D, noise_bound)),
      bias_field_(problem_.domain, noise.delta, noise.bias_kind, noise.bias_scale, seed),
      rng_(seed, stream) {
  if (noise_.grad_bias > 0) {
    CounterRng wrng(seed, CounterRng::stream_id(0, "grad-bias-w"));
    Vec g = wrng.gaussian_vec(problem_.dim);
    const double r = norm2(g);
    grad_bias_dir_ = r > 0 ? scaled(g, 1.0 / r) : unit(problem_.dim, 0);
    // normalize to unit dual norm so ||bias||_* = grad_bias exactly
    const double dn = norm_dual(problem_.domain, grad_bias_dir_);
    grad_bias_dir_ = scaled(grad_bias_dir_, 1.0 / dn);
  }
}

FirstOrderReply FirstOrderOracle::query(const Vec& x, long long batch) {
  if (batch < 1) throw std::invalid_argument("oracle query: batch must be >= 1");
  if (!all_finite(x)) throw std::invalid_argument("oracle query: non-finite point");
  if (!contains(problem_.domain, x, 1e-7))
    throw std::invalid_argument("oracle query: point outside the feasible set");

  FirstOrderReply r;
  r.G = Vec(problem_.dim, 0.0);
  for (long long i = 0; i < batch; ++i) {
    const Vec xi = family_.draw_xi(rng_);
    r.F += family_.value(x, xi);
    axpy(1.0, family_.gradient(x, xi), r.G);
  }
  r.F /= static_cast<double>(batch);
  r.G = scaled(r.G, 1.0 / static_cast<double>(batch));
  r.F += bias_field_.value(x);
  if (noise_.grad_bias > 0) axpy(noise_.grad_bias, grad_bias_dir_, r.G);
  counter_.total_calls += batch;
  return r;
}

double FirstOrderOracle::value_query(const Vec& x, long long batch) {
  if (batch < 1) throw std::invalid_argument("oracle query: batch must be >= 1");
  double F = 0.0;
  for (long long i = 0; i < batch; ++i) {
    const Vec xi = family_.draw_xi(rng_);
    F += family_.value(x, xi);
  }
  counter_.total_calls += batch;
  return F / static_cast<double>(batch) + bias_field_.value(x);
}

FirstOrderOracle biased_fo_from_holder(const TestProblem& problem, double delta,
                                       std::uint64_t seed, std::uint64_t stream) {
  if (!problem.constants.nu || !problem.constants.L_nu)
    throw std::invalid_argument("biased_fo_from_holder: problem has no Holder certificate");
  const double nu = *problem.constants.nu;
  if (delta <= 0 && nu < 1.0)
    throw std::invalid_argument("biased_fo_from_holder: delta must be positive for nu < 1");
  FirstOrderOracle o(problem, NoiseModel{}, 0.0, 0.0, seed, stream);
  o.tag(nu == 1.0 ? std::max(delta, 0.0) : delta,
        holder_to_smooth(*problem.constants.L_nu, nu, nu == 1.0 ? 1.0 : delta));
  return o;
}

ZeroOrderOracle::ZeroOrderOracle(TestProblem problem, NoiseModel noise, double D,
                                 double noise_bound, int k, std::uint64_t seed,
                                 std::uint64_t stream)
    : problem_(std::move(problem)),
      noise_(noise),
      family_(stochastic_wrapper(problem_, D, noise_bound)),
      bias_field_(problem_.domain, noise.delta, noise.bias_kind, noise.bias_scale, seed),
      rng_(seed, stream) {
  if (k < 2 || k > problem_.dim + 1)
    throw std::invalid_argument("zero-order oracle: k must lie in [2, n+1]");
  counter_.k_max = k;
}

ZeroOrderOracle::Realization ZeroOrderOracle::open() {
  counter_.realizations += 1;
  Vec xi = family_.draw_xi(rng_);
  const double dbar = noise_.delta > 0 ? rng_.uniform(-noise_.delta, noise_.delta) : 0.0;
  return Realization(this, std::move(xi), dbar, counter_.k_max);
}

double ZeroOrderOracle::Realization::eval(const Vec& x) {
  if (used_ >= k_) throw std::runtime_error("zero-order realization: query budget exhausted");
  if (!all_finite(x)) throw std::invalid_argument("zero-order eval: non-finite point");
  ++used_;
  o_->counter_.total_calls += 1;
  return o_->family_.value(x, xi_) + o_->bias_field_.value(x) + dbar_;
}

DirectionalOracle::DirectionalOracle(TestProblem problem, NoiseModel noise, double D,
                                     double noise_bound, int k, std::uint64_t seed,
                                     std::uint64_t stream)
    : problem_(std::move(problem)),
      noise_(noise),
      family_(stochastic_wrapper(problem_, D, noise_bound)),
      rng_(seed, stream) {
  if (k < 2 || k > problem_.dim + 1)
    throw std::invalid_argument("directional oracle: k must lie in [2, n+1]");
  counter_.k_max = k;
}

DirectionalOracle::Realization DirectionalOracle::open() {
  counter_.realizations += 1;
  Vec xi = family_.draw_xi(rng_);
  const double dbar = noise_.delta > 0 ? rng_.uniform(-noise_.delta, noise_.delta) : 0.0;
  return Realization(this, std::move(xi), dbar, counter_.k_max);
}

double DirectionalOracle::Realization::query(const Vec& x, const Vec& s) {
  if (used_ >= k_) throw std::runtime_error("directional realization: query budget exhausted");
  if (std::fabs(norm2(s) - 1.0) > 1e-12)
    throw std::invalid_argument("directional oracle: s must have unit 2-norm");
  ++used_;
  o_->counter_.total_calls += 1;
  return dot(o_->family_.gradient(x, xi_), s) + dbar_;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (pass ? "pass" : "FAIL") << ": " << pairs << " pairs, " << upper_violations
     << " upper / " << lower_violations << " lower violations"
     << ", max beyond slack " << std::max(max_upper_violation, max_lower_violation);
  return os.str();
}

ValidationReport validate_assumption1(FirstOrderOracle& oracle, const OracleClaim& claim,
                                      int sample_pairs, int draws_per_point, CounterRng& rng) {
  if (sample_pairs < 1 || draws_per_point < 1)
    throw std::invalid_argument("validate_assumption1: sample sizes must be >= 1");
  const ProxSetup& Q = oracle.setup();
  const TestProblem& pb = oracle.problem();
  ValidationReport rep;
  rep.pairs = sample_pairs;

  for (int i = 0; i < sample_pairs; ++i) {
    const Vec x = sample_in(Q, rng);
    const Vec y = sample_in(Q, rng);
    const Vec d = sub(y, x);
    const double dist = norm_primal(Q, d);

    // t_j = F_j(x) + <G_j(x), y-x>; the sandwich middle is f(y) - mean(t).
    double mean_t = 0.0, m2 = 0.0;
    for (int j = 0; j < draws_per_point; ++j) {
      const FirstOrderReply rj = oracle.query(x, 1);
      const double t = rj.F + dot(rj.G, d);
      const double delta_t = t - mean_t;
      mean_t += delta_t / (j + 1);
      m2 += delta_t * (t - mean_t);
    }
    const double se = draws_per_point > 1
                          ? std::sqrt(m2 / (draws_per_point - 1) / draws_per_point)
                          : 0.0;
    const double slack = 3.0 * se;

    const double middle = pb.f(y) - mean_t;
    const double upper = 0.5 * claim.L * dist * dist + claim.delta;
    const double lower = 0.5 * claim.mu * dist * dist;
    if (middle > upper + slack) {
      rep.upper_violations += 1;
      rep.max_upper_violation = std::max(rep.max_upper_violation, middle - upper - slack);
    }
    if (middle < lower - slack) {
      rep.lower_violations += 1;
      rep.max_lower_violation = std::max(rep.max_lower_violation, lower - slack - middle);
    }
  }
  rep.pass = rep.upper_violations == 0 && rep.lower_violations == 0;
  return rep;
}

}  // namespace sco
