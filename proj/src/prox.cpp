#include "sco/prox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sco {

namespace {
constexpr double kEntropyFloor = 1e-300;  // clamp before logs on the simplex
}

ProxSetup ProxSetup::ball(Vec center, double radius) {
  if (radius <= 0) throw std::invalid_argument("ball radius must be positive");
  if (!all_finite(center)) throw std::invalid_argument("ball center must be finite");
  ProxSetup s;
  s.norm = Norm::euclidean;
  s.set = SetKind::ball2;
  s.dim = static_cast<int>(center.size());
  s.center = std::move(center);
  s.radius = radius;
  // max_{x in Q} V(x, center) = radius^2 / 2
  s.R = radius / std::sqrt(2.0);
  return s;
}

ProxSetup ProxSetup::box_set(Vec lo, Vec hi) {
  require_same_dim(lo, hi);
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) throw std::invalid_argument("box needs lo < hi per coordinate");
  ProxSetup s;
  s.norm = Norm::euclidean;
  s.set = SetKind::box;
  s.dim = static_cast<int>(lo.size());
  s.center.resize(lo.size());
  double r2 = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    s.center[i] = 0.5 * (lo[i] + hi[i]);
    const double h = 0.5 * (hi[i] - lo[i]);
    r2 += h * h;
  }
  s.lo = std::move(lo);
  s.hi = std::move(hi);
  s.R = std::sqrt(0.5 * r2);
  return s;
}

ProxSetup ProxSetup::simplex(int n) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be >= 1");
  ProxSetup s;
  s.norm = Norm::ell1_entropy;
  s.set = SetKind::simplex;
  s.dim = n;
  s.center = Vec(n, 1.0 / n);
  // max over Q of KL(x || uniform) = ln n, attained at the vertices
  s.R = n > 1 ? std::sqrt(std::log(static_cast<double>(n))) : 0.0;
  return s;
}

std::string ProxSetup::describe() const {
  switch (set) {
    case SetKind::ball2: return "ball2(r=" + std::to_string(radius) + ")";
    case SetKind::box: return "box";
    case SetKind::simplex: return "simplex(n=" + std::to_string(dim) + ")";
  }
  return "?";
}

double norm_of(const ProxSetup& s, const Vec& x, WhichNorm which) {
  if (static_cast<int>(x.size()) != s.dim) throw std::invalid_argument("norm_of: dimension mismatch with setup");
  if (s.norm == Norm::euclidean) return norm2(x);
  return which == WhichNorm::primal ? norm1(x) : norm_inf(x);
}

double bregman(const ProxSetup& s, const Vec& x, const Vec& y) {
  require_same_dim(x, y);
  if (s.norm == Norm::euclidean) {
    const Vec d = sub(x, y);
    return 0.5 * dot(d, d);
  }
  // Negative entropy dgf: V(x,y) = sum x_i ln(x_i/y_i) - x_i + y_i.
  double v = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = std::max(x[i], 0.0);
    const double yi = std::max(y[i], kEntropyFloor);
    if (xi > 0) v += xi * std::log(std::max(xi, kEntropyFloor) / yi) - xi + yi;
    else v += yi;
  }
  return v;
}

Vec project(const ProxSetup& s, const Vec& x) {
  if (static_cast<int>(x.size()) != s.dim) throw std::invalid_argument("project: dimension mismatch");
  switch (s.set) {
    case SetKind::ball2: {
      Vec d = sub(x, s.center);
      const double r = norm2(d);
      if (r <= s.radius) return x;
      return combine(1.0, s.center, s.radius / r, d);
    }
    case SetKind::box: {
      Vec r(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) r[i] = std::clamp(x[i], s.lo[i], s.hi[i]);
      return r;
    }
    case SetKind::simplex: {
      Vec r(x.size());
      double sum = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        r[i] = std::max(x[i], 0.0);
        sum += r[i];
      }
      if (sum <= 0.0) return Vec(x.size(), 1.0 / x.size());
      for (auto& v : r) v /= sum;
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

Vec prox_step(const ProxSetup& s, const Vec& z, const Vec& g, double a) {
  require_same_dim(z, g);
  if (a < 0) throw std::invalid_argument("prox_step: negative step weight");
  if (s.norm == Norm::euclidean) {
    return project(s, combine(1.0, z, -a, g));
  }
  // Entropic (multiplicative-weights) update, renormalized.
  Vec u(z.size());
  double umax = -1e300;
  for (std::size_t i = 0; i < z.size(); ++i) {
    u[i] = std::log(std::max(z[i], kEntropyFloor)) - a * g[i];
    umax = std::max(umax, u[i]);
  }
  Vec x(z.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    x[i] = std::exp(u[i] - umax);
    sum += x[i];
  }
  for (auto& v : x) v /= sum;
  return x;
}

bool contains(const ProxSetup& s, const Vec& x, double tol) {
  if (static_cast<int>(x.size()) != s.dim) return false;
  switch (s.set) {
    case SetKind::ball2:
      return norm2(sub(x, s.center)) <= s.radius + tol;
    case SetKind::box:
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < s.lo[i] - tol || x[i] > s.hi[i] + tol) return false;
      return true;
    case SetKind::simplex: {
      double sum = 0.0;
      for (double v : x) {
        if (v < -tol) return false;
        sum += v;
      }
      return std::fabs(sum - 1.0) <= tol * std::max<double>(1, s.dim);
    }
  }
  return false;
}

bool strictly_inside(const ProxSetup& s, const Vec& x, double margin) {
  switch (s.set) {
    case SetKind::ball2:
      return norm2(sub(x, s.center)) < s.radius - margin;
    case SetKind::box:
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < s.lo[i] + margin || x[i] > s.hi[i] - margin) return false;
      return true;
    case SetKind::simplex: {
      double sum = 0.0;
      for (double v : x) {
        if (v < margin) return false;
        sum += v;
      }
      return std::fabs(sum - 1.0) <= 1e-9;
    }
  }
  return false;
}

Vec sample_in(const ProxSetup& s, CounterRng& rng) {
  switch (s.set) {
    case SetKind::ball2: {
      Vec g = rng.gaussian_vec(s.dim);
      const double nr = norm2(g);
      const double u = std::pow(rng.uniform01(), 1.0 / s.dim);
      if (nr == 0.0) return s.center;
      return combine(1.0, s.center, s.radius * u / nr, g);
    }
    case SetKind::box: {
      Vec x(s.dim);
      for (int i = 0; i < s.dim; ++i) x[i] = rng.uniform(s.lo[i], s.hi[i]);
      return x;
    }
    case SetKind::simplex: {
      Vec x(s.dim);
      double sum = 0.0;
      for (int i = 0; i < s.dim; ++i) {
        x[i] = -std::log(std::max(1.0 - rng.uniform01(), 1e-300));
        sum += x[i];
      }
      for (auto& v : x) v /= sum;
      return x;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace sco
