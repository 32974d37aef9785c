#pragma once

#include <optional>
#include <string>

#include "sco/problems.hpp"
#include "sco/prox.hpp"
#include "sco/rng.hpp"
#include "sco/vec.hpp"

namespace sco {

struct FirstOrderReply {
  double F = 0.0;
  Vec G;
};

enum class BiasKind { none, sine };

// Injectable inexactness: a deterministic value-bias field of magnitude
// delta, a per-realization random value bias in [-delta, delta], and an
// optional additive gradient bias for stress tests.
struct NoiseModel {
  double delta = 0.0;
  BiasKind bias_kind = BiasKind::sine;
  double bias_scale = 1.0;  // scales the field frequency; 1 keeps the
                            // Lipschitz certificate valid by construction
  double grad_bias = 0.0;   // ||additive gradient bias||_* <= grad_bias
};

struct CallCounter {
  long long total_calls = 0;
  long long realizations = 0;
  int k_max = 2;  // queries permitted per open realization
};

struct OracleClaim {
  double delta = 0.0;
  double L = 0.0;
  double mu = 0.0;
  double D = 0.0;
};

// delta * sin(q * bias_scale * <w, x - center>) with a fixed unit w and
// q = min(R, 1/R), which keeps |field| <= delta and the field
// (R*delta)-Lipschitz in the primal norm.
class BiasField {
 public:
  BiasField() = default;
  BiasField(const ProxSetup& setup, double delta, BiasKind kind, double bias_scale,
            std::uint64_t seed);
  double value(const Vec& x) const;
  double lipschitz_bound() const { return delta_ * q_; }

 private:
  double delta_ = 0.0;
  double q_ = 0.0;
  BiasKind kind_ = BiasKind::none;
  Vec w_, center_;
};

// Call-counted stochastic first-order oracle. Each query draws fresh noise
// realizations, averages `batch` replies and advances the counter by
// `batch`. Tagged constants mark an exact oracle that solvers must treat as
// a (delta, L)-inexact one.
class FirstOrderOracle {
 public:
  FirstOrderOracle(TestProblem problem, NoiseModel noise, double D, double noise_bound,
                   std::uint64_t seed, std::uint64_t stream);

  FirstOrderReply query(const Vec& x, long long batch = 1);
  double value_query(const Vec& x, long long batch = 1);

  const TestProblem& problem() const { return problem_; }
  const ProxSetup& setup() const { return problem_.domain; }
  const CallCounter& counter() const { return counter_; }
  void reset_counter() { counter_ = CallCounter{}; }
  double D() const { return family_.D; }

  void tag(double delta, double L) { tagged_ = OracleClaim{delta, L, 0.0, family_.D}; }
  const std::optional<OracleClaim>& tagged() const { return tagged_; }

  const BiasField& bias_field() const { return bias_field_; }

 private:
  TestProblem problem_;
  NoiseModel noise_;
  StochasticFamily family_;
  BiasField bias_field_;
  Vec grad_bias_dir_;
  CounterRng rng_;
  CallCounter counter_;
  std::optional<OracleClaim> tagged_;
};

// Exact oracle for a Holder-gradient problem, tagged with the certified
// (delta, L(delta, nu)) pair of the smoothing embedding.
FirstOrderOracle biased_fo_from_holder(const TestProblem& problem, double delta,
                                       std::uint64_t seed = 1, std::uint64_t stream = 0);

// Function-value oracle: fixes one realization xi per open(), answers at most
// k value queries f(x, xi) + field(x) + dbar(xi) on it. Queries are legal in
// a tau-neighborhood of Q (no membership check).
class ZeroOrderOracle {
 public:
  ZeroOrderOracle(TestProblem problem, NoiseModel noise, double D, double noise_bound, int k,
                  std::uint64_t seed, std::uint64_t stream);

  class Realization {
   public:
    double eval(const Vec& x);
    int queries_left() const { return k_ - used_; }
    const Vec& xi() const { return xi_; }
    double value_noise() const { return dbar_; }

   private:
    friend class ZeroOrderOracle;
    Realization(ZeroOrderOracle* o, Vec xi, double dbar, int k)
        : o_(o), xi_(std::move(xi)), dbar_(dbar), k_(k) {}
    ZeroOrderOracle* o_;
    Vec xi_;
    double dbar_ = 0.0;
    int used_ = 0;
    int k_ = 0;
  };

  Realization open();
  const TestProblem& problem() const { return problem_; }
  const CallCounter& counter() const { return counter_; }
  void reset_counter(int k) { counter_ = CallCounter{}; counter_.k_max = k; }
  int k() const { return counter_.k_max; }

 private:
  TestProblem problem_;
  NoiseModel noise_;
  StochasticFamily family_;
  BiasField bias_field_;
  CounterRng rng_;
  CallCounter counter_;
};

// Directional-derivative oracle: one realization per open(), at most k
// replies <grad f(x, xi), s> + dbar(xi) for unit directions s.
class DirectionalOracle {
 public:
  DirectionalOracle(TestProblem problem, NoiseModel noise, double D, double noise_bound, int k,
                    std::uint64_t seed, std::uint64_t stream);

  class Realization {
   public:
    double query(const Vec& x, const Vec& s);
    int queries_left() const { return k_ - used_; }
    const Vec& xi() const { return xi_; }

   private:
    friend class DirectionalOracle;
    Realization(DirectionalOracle* o, Vec xi, double dbar, int k)
        : o_(o), xi_(std::move(xi)), dbar_(dbar), k_(k) {}
    DirectionalOracle* o_;
    Vec xi_;
    double dbar_ = 0.0;
    int used_ = 0;
    int k_ = 0;
  };

  Realization open();
  const TestProblem& problem() const { return problem_; }
  const CallCounter& counter() const { return counter_; }

 private:
  TestProblem problem_;
  NoiseModel noise_;
  StochasticFamily family_;
  CounterRng rng_;
  CallCounter counter_;
};

struct ValidationReport {
  bool pass = true;
  int pairs = 0;
  int upper_violations = 0;
  int lower_violations = 0;
  double max_upper_violation = 0.0;  // positive value = amount beyond slack
  double max_lower_violation = 0.0;
  std::string summary() const;
};

// Monte-Carlo falsification of the two-sided oracle sandwich
//   mu/2 ||y-x||^2 <= f(y) - E F(x) - <E G(x), y-x> <= L/2 ||y-x||^2 + delta
// on sampled pairs, with 3-standard-error statistical slack on the
// estimated expectations.
ValidationReport validate_assumption1(FirstOrderOracle& oracle, const OracleClaim& claim,
                                      int sample_pairs, int draws_per_point, CounterRng& rng);

}  // namespace sco
