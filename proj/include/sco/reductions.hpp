#pragma once

#include <optional>

namespace sco {

// Closed-form class embeddings shared by the oracle layer and the budget
// calculators. One global constant C (default 10) scales every O(.)-style
// bound in this project.

inline constexpr double kDefaultC = 10.0;

struct SmoothingCertificate {
  double delta = 0.0;
  double L_effective = 0.0;
  double nu = 1.0;
  double L_nu = 0.0;
};

struct StrongConvexityCertificate {
  double delta = 0.0;
  double mu_effective = 0.0;
  double rho = 2.0;
  double kappa_rho = 0.0;
};

// Holder-gradient class into the inexact-smooth class:
//   L = L_nu * [ L_nu (1-nu) / (2 delta (1+nu)) ]^{(1-nu)/(1+nu)}.
// nu = 1 returns L_nu for any delta; delta = 0 with nu < 1 is rejected
// (the embedded constant would be infinite).
double holder_to_smooth(double L_nu, double nu, double delta);

// Largest oracle bias compatible with target accuracy: eps / (C * N^p).
double admissible_delta(double eps, double N, double p, double C = kDefaultC);

// Uniformly convex (degree rho, modulus kappa) into strongly convex:
//   mu = 2^{1-4/rho} kappa^{2/rho} rho (1/(rho-2))^rho delta^{(rho-2)/rho}.
// The printed factor is singular as rho -> 2+; degree 2 returns kappa
// directly. Implemented verbatim only for rho > 2 + 1e-6.
double uniform_to_strong(double kappa_rho, double rho, double delta);

// Variance constant once the model carries an M-term: M^2 + D.
double m_term_variance(double D, double M);

SmoothingCertificate make_smoothing_certificate(double L_nu, double nu, double delta);
StrongConvexityCertificate make_strong_convexity_certificate(double kappa_rho, double rho, double delta);

}  // namespace sco
