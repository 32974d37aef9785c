#pragma once

#include <string>

#include "sco/rng.hpp"
#include "sco/vec.hpp"

namespace sco {

enum class Norm { euclidean, ell1_entropy };
enum class SetKind { ball2, box, simplex };

enum class WhichNorm { primal, dual };

// Feasible set + norm pair + distance-generating function + prox-center.
// The dgf is 1-strongly convex in the primal norm: squared Euclidean distance
// for the euclidean pair, negative entropy for the simplex.
struct ProxSetup {
  Norm norm = Norm::euclidean;
  SetKind set = SetKind::ball2;
  int dim = 0;
  Vec center;      // prox-center (ball center, box midpoint, uniform point)
  double radius = 0.0;  // ball2 only
  Vec lo, hi;           // box only
  double R = 0.0;       // prox-diameter: V(x, center) <= R^2 for all x in Q

  static ProxSetup ball(Vec center, double radius);
  static ProxSetup box_set(Vec lo, Vec hi);
  static ProxSetup simplex(int n);

  std::string describe() const;
};

double norm_of(const ProxSetup& s, const Vec& x, WhichNorm which);
inline double norm_primal(const ProxSetup& s, const Vec& x) { return norm_of(s, x, WhichNorm::primal); }
inline double norm_dual(const ProxSetup& s, const Vec& x) { return norm_of(s, x, WhichNorm::dual); }

// Bregman divergence V(x, y) of the setup's dgf.
double bregman(const ProxSetup& s, const Vec& x, const Vec& y);

// argmin_{x in Q} { a*<g, x> + V(x, z) }.  Closed form per set: Euclidean
// projection of z - a*g for ball2/box, renormalized entropic update on the
// simplex.
Vec prox_step(const ProxSetup& s, const Vec& z, const Vec& g, double a);

// Nearest point of Q in 2-norm for euclidean sets; clamp-and-renormalize on
// the simplex.
Vec project(const ProxSetup& s, const Vec& x);

bool contains(const ProxSetup& s, const Vec& x, double tol = 1e-9);
bool strictly_inside(const ProxSetup& s, const Vec& x, double margin);

// Uniform-ish sample of Q (uniform in ball/box, Dirichlet(1) on the simplex).
Vec sample_in(const ProxSetup& s, CounterRng& rng);

}  // namespace sco
