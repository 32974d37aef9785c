#include "sco/reductions.hpp"

#include <cmath>
#include <stdexcept>

namespace sco {

double holder_to_smooth(double L_nu, double nu, double delta) {
  if (L_nu <= 0) throw std::invalid_argument("holder_to_smooth: L_nu must be positive");
  if (nu < 0 || nu > 1) throw std::invalid_argument("holder_to_smooth: nu must lie in [0,1]");
  if (nu == 1.0) return L_nu;
  if (delta <= 0) throw std::invalid_argument("holder_to_smooth: delta must be positive for nu < 1");
  const double base = L_nu * (1.0 - nu) / (2.0 * delta * (1.0 + nu));
  return L_nu * std::pow(base, (1.0 - nu) / (1.0 + nu));
}

double admissible_delta(double eps, double N, double p, double C) {
  if (eps <= 0 || N < 1 || p < 0 || p > 1 || C <= 0)
    throw std::invalid_argument("admissible_delta: need eps > 0, N >= 1, p in [0,1], C > 0");
  return eps / (C * std::pow(N, p));
}

double uniform_to_strong(double kappa_rho, double rho, double delta) {
  if (rho < 2.0) throw std::invalid_argument("uniform_to_strong: rho must be >= 2");
  if (kappa_rho <= 0) throw std::invalid_argument("uniform_to_strong: kappa must be positive");
  if (rho <= 2.0 + 1e-6) return kappa_rho;  // degree-2 uniform convexity is strong convexity
  if (delta <= 0) throw std::invalid_argument("uniform_to_strong: delta must be positive for rho > 2");
  return std::pow(2.0, 1.0 - 4.0 / rho) * std::pow(kappa_rho, 2.0 / rho) * rho *
         std::pow(1.0 / (rho - 2.0), rho) * std::pow(delta, (rho - 2.0) / rho);
}

double m_term_variance(double D, double M) {
  if (D < 0 || M < 0) throw std::invalid_argument("m_term_variance: D and M must be >= 0");
  return M * M + D;
}

SmoothingCertificate make_smoothing_certificate(double L_nu, double nu, double delta) {
  return {delta, holder_to_smooth(L_nu, nu, delta), nu, L_nu};
}

StrongConvexityCertificate make_strong_convexity_certificate(double kappa_rho, double rho, double delta) {
  return {delta, uniform_to_strong(kappa_rho, rho, delta), rho, kappa_rho};
}

}  // namespace sco
