#include "sco/budget.hpp"

#include <cmath>
#include <stdexcept>

namespace sco {

namespace {

long long ceil_ll(double x) {
  if (x < 1.0) return 1;
  return static_cast<long long>(std::ceil(x - 1e-12));
}

double clamped_log_ceil(double arg) {
  if (arg <= 1.0) return 1.0;
  return std::ceil(std::log(arg) - 1e-12);
}

void check_common(double p, double eps, double C) {
  if (p < 0 || p > 1) throw std::invalid_argument("budget: p must lie in [0,1]");
  if (eps <= 0) throw std::invalid_argument("budget: eps must be positive");
  if (C <= 0) throw std::invalid_argument("budget: C must be positive");
}

Budget assemble(double det, double var, double delta_max, double iters, double C) {
  Budget b;
  b.C = C;
  b.det_term = det;
  b.var_term = var;
  b.calls_real = std::max(det, var);
  b.iters_real = iters;
  b.dominating = var > det ? Budget::Dominating::variance : Budget::Dominating::deterministic;
  b.oracle_calls = ceil_ll(b.calls_real);
  b.iterations = ceil_ll(iters);
  b.batch = std::max<long long>(1, (b.oracle_calls + b.iterations - 1) / b.iterations);
  b.delta_max = delta_max;
  return b;
}

}  // namespace

Budget thm1_budget(double p, double L, double R, double D, double eps, double C) {
  check_common(p, eps, C);
  if (L <= 0 || R <= 0 || D < 0) throw std::invalid_argument("thm1_budget: need L, R > 0 and D >= 0");
  const double lr2 = L * R * R;
  const double det = C * std::pow(lr2 / eps, 1.0 / (p + 1.0));
  const double var = C * D * R * R / (eps * eps);
  const double delta_max = eps * std::pow(eps / lr2, p / (p + 1.0)) / C;
  return assemble(det, var, delta_max, det, C);
}

Budget thm1_sc_budget(double p, double L2, double mu2, double D2, double R2, double eps, double C) {
  check_common(p, eps, C);
  if (L2 <= 0 || mu2 <= 0 || R2 <= 0 || D2 < 0)
    throw std::invalid_argument("thm1_sc_budget: need L2, mu2, R2 > 0 and D2 >= 0");
  const double cond = std::pow(L2 / mu2, 1.0 / (p + 1.0));
  const double log_mu = clamped_log_ceil(mu2 * R2 * R2 / eps);
  const double log_L = clamped_log_ceil(L2 * R2 * R2 / eps);
  const double det = C * cond * log_mu;
  const double var = C * D2 / (mu2 * eps);
  const double delta_max = eps * std::pow(mu2 / L2, p / (p + 1.0)) / C;
  Budget b = assemble(det, var, delta_max, det, C);
  b.iters_alt_display = C * cond * log_L;
  b.display_mismatch = std::fabs(*b.iters_alt_display - b.iters_real) > 1e-9 * b.iters_real;
  return b;
}

IterationPair remark3_iterations(double p, double L, double R, double M, double eps,
                                 std::optional<double> mu2, double C) {
  check_common(p, eps, C);
  if (L < 0 || R <= 0 || M < 0) throw std::invalid_argument("remark3_iterations: bad constants");
  IterationPair it;
  if (mu2) {
    if (*mu2 <= 0) throw std::invalid_argument("remark3_iterations: mu2 must be positive");
    it.smooth_term = L > 0 ? C * std::pow(L / *mu2, 1.0 / (p + 1.0)) *
                                 std::max(1.0, std::log(L * R * R / eps))
                           : 0.0;
    it.m_term = C * M * M / (*mu2 * eps);
  } else {
    it.smooth_term = L > 0 ? C * std::pow(L * R * R / eps, 1.0 / (p + 1.0)) : 0.0;
    it.m_term = C * M * M * R * R / (eps * eps);
  }
  it.total = it.smooth_term + it.m_term;
  return it;
}

namespace {

double cor_det_term_convex(double p, double nu, double L_nu, double R, double eps, double C) {
  const double expnt = 2.0 / (1.0 + 2.0 * p * nu + nu);
  return C * std::pow(L_nu * std::pow(R, 1.0 + nu) / eps, expnt);
}

double cor_det_term_sc(double p, double nu, double L_nu2, double mu2, double R2, double eps,
                       double C) {
  const double expnt = (1.0 + nu) / (1.0 + 2.0 * p * nu + nu);
  const double inner = std::pow(L_nu2, 1.0 + nu) / (mu2 * std::pow(eps, 1.0 + nu));
  return C * std::pow(inner, expnt) * clamped_log_ceil(mu2 * R2 * R2 / eps);
}

}  // namespace

Budget cor1_budget(double p, const std::vector<HolderPoint>& profile, double R, double eps,
                   double C, std::optional<double> mu2) {
  check_common(p, eps, C);
  if (profile.empty()) throw std::invalid_argument("cor1_budget: profile must be non-empty");
  if (R <= 0) throw std::invalid_argument("cor1_budget: R must be positive");

  // Grid minimization (step 0.01): a profile pair applies at every grid nu
  // it certifies, i.e. exactly its own nu (no interpolation is invented).
  double best = 1e300, best_nu = 1.0;
  for (const auto& hp : profile) {
    if (hp.nu < 0 || hp.nu > 1 || hp.L_nu <= 0) throw std::invalid_argument("cor1_budget: bad profile entry");
    const double nu_snapped = std::round(hp.nu * 100.0) / 100.0;
    for (double nu : {hp.nu, nu_snapped}) {
      const double val = mu2 ? cor_det_term_sc(p, nu, hp.L_nu, *mu2, R, eps, C)
                             : cor_det_term_convex(p, nu, hp.L_nu, R, eps, C);
      if (val < best) {
        best = val;
        best_nu = hp.nu;
      }
    }
  }
  const double delta_max = eps / (C * std::pow(best, p));
  Budget b = assemble(best, 0.0, delta_max, best, C);
  b.argmin_nu = best_nu;
  return b;
}

Budget cor2_budget(double p, double nu, double L_nu, double R, double D, double eps, double C,
                   std::optional<double> mu2, double D2) {
  check_common(p, eps, C);
  if (nu < 0 || nu > 1 || L_nu <= 0 || R <= 0 || D < 0)
    throw std::invalid_argument("cor2_budget: bad constants");
  double det, var;
  if (mu2) {
    if (*mu2 <= 0) throw std::invalid_argument("cor2_budget: mu2 must be positive");
    det = cor_det_term_sc(p, nu, L_nu, *mu2, R, eps, C);
    var = C * D2 / (*mu2 * eps);
  } else {
    det = cor_det_term_convex(p, nu, L_nu, R, eps, C);
    var = C * D * R * R / (eps * eps);
  }
  const double delta_max = eps / (C * std::pow(det, p));
  return assemble(det, var, delta_max, det, C);
}

namespace {

Budget zo_scaled(const Budget& fo, int n, int k) {
  if (k < 2 || k > n + 1) throw std::invalid_argument("zo budget: k must lie in [2, n+1]");
  Budget b = fo;
  b.det_term *= n;
  b.var_term *= n;
  b.calls_real *= n;
  b.iters_real = fo.iters_real * static_cast<double>(n) / k;
  b.oracle_calls = ceil_ll(b.calls_real);
  b.iterations = ceil_ll(b.iters_real);
  b.batch = std::max<long long>(1, (b.oracle_calls + b.iterations - 1) / b.iterations);
  return b;
}

}  // namespace

Budget thm2_budget(double p, int n, double L, double R, double D, double eps, double C, int k,
                   std::optional<double> mu2) {
  if (n < 1) throw std::invalid_argument("thm2_budget: n must be >= 1");
  Budget fo = mu2 ? thm1_sc_budget(p, L, *mu2, D, R, eps, C) : thm1_budget(p, L, R, D, eps, C);
  if (mu2) {
    // iteration display in the gradient-free case uses the mu2 log argument
    fo.iters_alt_display.reset();
    fo.display_mismatch = false;
  }
  Budget b = zo_scaled(fo, n, k);
  b.delta_max = fo.delta_max / n;
  return b;
}

Budget thm3_budget(double p, int n, double L, double R, double D, double eps, double C, int k,
                   std::optional<double> mu2) {
  Budget b = thm2_budget(p, n, L, R, D, eps, C, k, mu2);
  const double inner = mu2 ? eps * std::pow(*mu2 / L, p / (p + 1.0)) / C
                           : eps * std::pow(eps / (L * R * R), p / (p + 1.0)) / C;
  b.delta_max = std::sqrt(L / n * inner);
  return b;
}

long long high_prob_calls(double N_eps, double sigma, double eps) {
  if (sigma <= 0 || sigma >= 1) throw std::invalid_argument("high_prob_calls: sigma must lie in (0,1)");
  if (sigma * eps >= 1) throw std::invalid_argument("high_prob_calls: need sigma*eps < 1");
  if (N_eps < 1) throw std::invalid_argument("high_prob_calls: N must be >= 1");
  const double factor = std::max(1.0, std::ceil(std::log(1.0 / (sigma * eps)) - 1e-12));
  return ceil_ll(N_eps * factor);
}

Budget uniform_convex_budget(double p, double rho, double kappa_rho, double delta, double L2,
                             double D2, double R2, double eps, double C) {
  const double mu = uniform_to_strong(kappa_rho, rho, delta);
  return thm1_sc_budget(p, L2, mu, D2, R2, eps, C);
}

}  // namespace sco
