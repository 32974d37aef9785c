#include "sco/problems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sco {

TestProblem quadratic(int n, const Vec& spectrum, const Vec& center, ProxSetup domain) {
  if (static_cast<int>(spectrum.size()) != n || static_cast<int>(center.size()) != n)
    throw std::invalid_argument("quadratic: spectrum/center size must equal n");
  if (domain.dim != n) throw std::invalid_argument("quadratic: domain dimension mismatch");
  double lmax = 0.0, lmin = 1e300;
  for (double l : spectrum) {
    if (l < 0) throw std::invalid_argument("quadratic: eigenvalues must be >= 0");
    lmax = std::max(lmax, l);
    lmin = std::min(lmin, l);
  }
  const bool c_inside = contains(domain, center, 1e-12);
  if (!c_inside) {
    for (double l : spectrum)
      if (std::fabs(l - spectrum[0]) > 1e-12 * std::max(1.0, spectrum[0]))
        throw std::invalid_argument("quadratic: center outside Q requires an isotropic spectrum");
  }

  TestProblem p;
  p.name = "quadratic";
  p.dim = n;
  p.domain = domain;
  Vec spec = spectrum, c = center;
  p.f = [spec, c](const Vec& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - c[i];
      s += spec[i] * d * d;
    }
    return 0.5 * s;
  };
  p.grad = [spec, c](const Vec& x) {
    Vec g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = spec[i] * (x[i] - c[i]);
    return g;
  };
  p.x_star = project(domain, center);
  p.f_star = p.f(p.x_star);
  p.constants.L = lmax;
  p.constants.mu2 = lmin;
  p.constants.nu = 1.0;
  p.constants.L_nu = lmax;
  return p;
}

TestProblem holder_power(int n, double nu, ProxSetup domain, int certificate_samples) {
  if (!(nu > 0.0) || nu > 1.0)
    throw std::invalid_argument("holder_power: nu must lie in (0,1] (use nonsmooth_abs for nu=0)");
  if (domain.dim != n) throw std::invalid_argument("holder_power: domain dimension mismatch");

  TestProblem p;
  p.name = "holder_power";
  p.dim = n;
  p.domain = domain;
  p.f = [nu](const Vec& x) { return std::pow(norm2(x), 1.0 + nu) / (1.0 + nu); };
  p.grad = [nu](const Vec& x) {
    const double r = norm2(x);
    if (r == 0.0) return Vec(x.size(), 0.0);
    return scaled(x, std::pow(r, nu - 1.0));
  };
  p.x_star = Vec(n, 0.0);
  p.f_star = 0.0;
  p.constants.nu = nu;
  if (nu == 1.0) {
    p.constants.L = 1.0;
    p.constants.L_nu = 1.0;
    p.constants.mu2 = 1.0;
    return p;
  }

  // Sampled Holder-constant certificate: max ||grad f(x)-grad f(y)|| / ||x-y||^nu.
  CounterRng rng(0x5C0FEEDull, CounterRng::stream_id(0, "Lnu-certificate"));
  double lnu = 0.0;
  for (int i = 0; i < certificate_samples; ++i) {
    const Vec x = sample_in(domain, rng);
    Vec y = sample_in(domain, rng);
    if (i % 8 == 0) y = scaled(x, rng.uniform01());  // pairs straddling the kink at 0
    const double dist = norm_primal(domain, sub(x, y));
    if (dist < 1e-12) continue;
    const double dg = norm_dual(domain, sub(p.grad(x), p.grad(y)));
    lnu = std::max(lnu, dg / std::pow(dist, nu));
  }
  p.constants.L_nu = lnu;
  return p;
}

TestProblem nonsmooth_abs(int n, const Vec& c, ProxSetup domain) {
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("nonsmooth_abs: c size must equal n");
  if (norm2(c) == 0.0) throw std::invalid_argument("nonsmooth_abs: c must be nonzero");
  if (domain.dim != n) throw std::invalid_argument("nonsmooth_abs: domain dimension mismatch");

  TestProblem p;
  p.name = "nonsmooth_abs";
  p.dim = n;
  p.domain = domain;
  Vec cv = c;
  p.f = [cv](const Vec& x) { return std::fabs(dot(cv, x)); };
  p.grad = [cv](const Vec& x) {
    const double t = dot(cv, x);
    return t >= 0.0 ? cv : scaled(cv, -1.0);
  };
  p.x_star = Vec(n, 0.0);
  p.f_star = 0.0;
  p.constants.M = 2.0 * norm_dual(domain, c);
  p.constants.nu = 0.0;
  p.constants.L_nu = *p.constants.M;
  return p;
}

TestProblem uniformly_convex_power(int n, double rho, ProxSetup domain, int certificate_samples) {
  if (rho < 2.0) throw std::invalid_argument("uniformly_convex_power: rho must be >= 2");
  if (domain.dim != n) throw std::invalid_argument("uniformly_convex_power: domain dimension mismatch");

  TestProblem p;
  p.name = "uniformly_convex_power";
  p.dim = n;
  p.domain = domain;
  p.f = [rho](const Vec& x) { return std::pow(norm2(x), rho) / rho; };
  p.grad = [rho](const Vec& x) {
    const double r = norm2(x);
    if (r == 0.0) return Vec(x.size(), 0.0);
    return scaled(x, std::pow(r, rho - 2.0));
  };
  p.x_star = Vec(n, 0.0);
  p.f_star = 0.0;
  p.constants.rho = rho;
  if (rho == 2.0) {
    p.constants.kappa_rho = 1.0;
    p.constants.L = 1.0;
    p.constants.mu2 = 1.0;
    return p;
  }

  // Sampled lower bound of the modulus in
  //   f(ax+(1-a)y) <= a f(x)+(1-a) f(y)
  //                   - (kappa/2) a(1-a)(a^{rho-1}+(1-a)^{rho-1}) ||x-y||^rho.
  CounterRng rng(0x5C0FEEDull, CounterRng::stream_id(0, "kappa-certificate"));
  double kappa = 1e300;
  for (int i = 0; i < certificate_samples; ++i) {
    const Vec x = sample_in(domain, rng);
    const Vec y = sample_in(domain, rng);
    const double a = rng.uniform(0.05, 0.95);
    const double dist = norm_primal(domain, sub(x, y));
    if (dist < 1e-6) continue;
    const Vec m = combine(a, x, 1.0 - a, y);
    const double lhs = a * p.f(x) + (1.0 - a) * p.f(y) - p.f(m);
    const double w = 0.5 * a * (1.0 - a) * (std::pow(a, rho - 1.0) + std::pow(1.0 - a, rho - 1.0));
    kappa = std::min(kappa, lhs / (w * std::pow(dist, rho)));
  }
  p.constants.kappa_rho = std::max(kappa, 0.0);
  return p;
}

Vec sample_dual_sphere(const ProxSetup& s, CounterRng& rng) {
  if (s.norm == Norm::euclidean) {
    for (;;) {
      Vec g = rng.gaussian_vec(s.dim);
      const double r = norm2(g);
      if (r > 1e-12) return scaled(g, 1.0 / r);
    }
  }
  // Dual of ell1 is ell_inf: scale a uniform cube sample onto the cube surface.
  for (;;) {
    Vec g(s.dim);
    for (auto& v : g) v = rng.uniform(-1.0, 1.0);
    const double m = norm_inf(g);
    if (m > 1e-12) return scaled(g, 1.0 / m);
  }
}

StochasticFamily stochastic_wrapper(TestProblem base, double D, double noise_bound) {
  if (D < 0) throw std::invalid_argument("stochastic_wrapper: D must be >= 0");
  StochasticFamily fam;
  fam.D = D;
  if (noise_bound <= 0.0) noise_bound = std::sqrt(3.0 * D);
  if (D > 0 && noise_bound * noise_bound < D)
    throw std::invalid_argument("stochastic_wrapper: noise_bound^2 < D is infeasible");
  fam.noise_bound = noise_bound;
  fam.base = std::move(base);
  return fam;
}

Vec StochasticFamily::draw_xi(CounterRng& rng) const {
  if (D == 0.0) return Vec(base.dim, 0.0);
  const Vec s = sample_dual_sphere(base.domain, rng);
  const double b = noise_bound;
  double u;
  if (b * b >= 3.0 * D) {
    // uniform scalar on [-sqrt(3D), sqrt(3D)]: E u^2 = D exactly
    u = std::sqrt(3.0 * D) * rng.uniform(-1.0, 1.0);
  } else {
    // three-point scalar {-b, 0, +b} with P(|u|=b) = D/b^2: E u^2 = D exactly
    const double q = D / (b * b);
    const double t = rng.uniform01();
    u = t < 0.5 * q ? b : (t < q ? -b : 0.0);
  }
  return scaled(s, u);
}

}  // namespace sco
