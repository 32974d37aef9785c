#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sco/vec.hpp"

namespace sco {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProblemSpec {
  std::string name;  // quadratic | holder_power | nonsmooth_abs | uniformly_convex_power
  int n = 0;
  Vec spectrum;  // quadratic; empty = all ones
  Vec center;    // quadratic; empty = zeros
  double nu = 0.5;
  double rho = 4.0;
  Vec c;  // nonsmooth_abs; empty = e_1
};

struct ProxSpec {
  std::string kind;  // ball2 | box | simplex
  Vec center;        // ball2; empty = zeros
  double radius = 1.0;
  Vec lo, hi;  // box
  Vec start;   // optional start point; empty = prox-center
};

struct OracleSpec {
  std::string kind = "first_order";  // first_order | zeroth_order | directional
  double delta = 0.0;
  double D = 0.0;
  double noise_bound = 0.0;
  std::string bias_kind = "sine";  // none | sine
  double bias_scale = 1.0;
  double grad_bias = 0.0;
  int k = 2;
  long long batch = 0;   // 0 = auto from the budget
  double tag_delta = 0;  // > 0: expose the exact oracle as (delta, L(delta))-inexact
};

struct SolverSpec {
  std::string family;  // igm | igm_restart | igm_universal | zo_two_point | zo_k_point | zo_directional
  double p = 1.0;
  std::vector<double> eps;
  long long max_iters = 0;  // 0 = auto from the budget
  long long max_calls = -1;
  double tau = 0.0;  // gradient-free smoothing radius; 0 = auto
  double L = 0.0;    // 0 = problem constant
  double L0 = 1.0;   // universal initial estimate
};

struct ExperimentConfig {
  ProblemSpec problem;
  ProxSpec prox;
  OracleSpec oracle;
  SolverSpec solver;
  std::vector<std::uint64_t> seeds;
  double C = 10.0;
  std::string output_dir = "out";
  bool timings = false;
  std::string echo;  // canonical JSON echo of the parsed config
};

// Parses and validates a JSON config. Throws ConfigError with a field path
// on missing/invalid entries. OPT_SEED in the environment replaces the seed
// list.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace sco
