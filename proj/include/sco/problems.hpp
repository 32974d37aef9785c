#pragma once

#include <functional>
#include <optional>
#include <string>

#include "sco/prox.hpp"
#include "sco/rng.hpp"
#include "sco/vec.hpp"

namespace sco {

// Analytic constants of a test objective. Optional fields are absent when the
// class does not apply (e.g. no finite L for a nonsmooth objective).
struct ProblemConstants {
  std::optional<double> L;        // Lipschitz constant of the gradient
  double mu2 = 0.0;               // strong convexity in the 2-norm
  std::optional<double> nu;       // Holder exponent of the gradient
  std::optional<double> L_nu;     // Holder constant
  std::optional<double> rho;      // uniform convexity degree
  std::optional<double> kappa_rho;
  std::optional<double> M;        // bound on subgradient differences
};

// Objective with exact value/(sub)gradient, known optimum, and certified
// constants. Ground truth for every benchmark in this repo.
struct TestProblem {
  std::string name;
  int dim = 0;
  std::function<double(const Vec&)> f;
  std::function<Vec(const Vec&)> grad;  // subgradient selector when nonsmooth
  double f_star = 0.0;
  Vec x_star;
  ProblemConstants constants;
  ProxSetup domain;

  double gap(const Vec& x) const { return f(x) - f_star; }
};

// f(x) = 1/2 <A(x-c), x-c> with diagonal A = diag(spectrum).
// L = max eigenvalue, mu2 = min eigenvalue. When c lies outside Q the
// spectrum must be isotropic so that x* = project(c) stays exact.
TestProblem quadratic(int n, const Vec& spectrum, const Vec& center, ProxSetup domain);

// f(x) = ||x||_2^{1+nu} / (1+nu); gradient is nu-Holder. L_nu is stored from
// a sampled certificate (max pairwise ratio).
TestProblem holder_power(int n, double nu, ProxSetup domain, int certificate_samples = 10000);

// f(x) = |<c, x>| with subgradient sign(<c,x>)*c, sign(0) = +1. M = 2||c||_*.
TestProblem nonsmooth_abs(int n, const Vec& c, ProxSetup domain);

// f(x) = ||x||_2^rho / rho; kappa_rho is certified numerically from sampled
// (x, y, alpha) triples of the defining inequality; exact 1 at rho = 2.
TestProblem uniformly_convex_power(int n, double rho, ProxSetup domain, int certificate_samples = 10000);

// Additive linear noise family: f(x, xi) = f(x) + <xi, x> with E xi = 0,
// E||xi||_*^2 = D and ||xi||_* <= noise_bound. Draws are uniform on the dual
// sphere scaled by a bounded random factor, so the variance is exact.
struct StochasticFamily {
  TestProblem base;
  double D = 0.0;
  double noise_bound = 0.0;  // sup ||xi||_*; defaults to sqrt(3 D)

  Vec draw_xi(CounterRng& rng) const;
  double value(const Vec& x, const Vec& xi) const { return base.f(x) + dot(xi, x); }
  Vec gradient(const Vec& x, const Vec& xi) const { return add(base.grad(x), xi); }
};

StochasticFamily stochastic_wrapper(TestProblem base, double D, double noise_bound = 0.0);

// Unit vector uniform on the dual-norm sphere of the setup.
Vec sample_dual_sphere(const ProxSetup& s, CounterRng& rng);

}  // namespace sco
