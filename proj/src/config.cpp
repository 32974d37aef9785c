#include "sco/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sco {

namespace {

using nlohmann::json;

Vec to_vec(const json& j, int n, const std::string& path) {
  if (j.is_number()) return Vec(n, j.get<double>());
  if (!j.is_array()) throw ConfigError(path + ": expected number or array");
  Vec v;
  for (const auto& e : j) {
    if (!e.is_number()) throw ConfigError(path + ": expected numeric entries");
    v.push_back(e.get<double>());
  }
  if (n > 0 && static_cast<int>(v.size()) != n)
    throw ConfigError(path + ": expected " + std::to_string(n) + " entries");
  return v;
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError("missing required field: " + path + key);
  return *it;
}

double num_or(const json& j, const std::string& key, double dflt, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return dflt;
  if (!it->is_number()) throw ConfigError(path + key + ": expected a number");
  return it->get<double>();
}

std::string str_or(const json& j, const std::string& key, const std::string& dflt,
                   const std::string& path) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return dflt;
  if (!it->is_string()) throw ConfigError(path + key + ": expected a string");
  return it->get<std::string>();
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  ExperimentConfig c;

  const json& pj = require(j, "problem", "");
  c.problem.name = require(pj, "name", "problem.").get<std::string>();
  c.problem.n = static_cast<int>(num_or(pj, "n", 0, "problem."));
  if (c.problem.n < 1) throw ConfigError("problem.n: must be a positive integer");
  if (pj.contains("spectrum")) c.problem.spectrum = to_vec(pj["spectrum"], c.problem.n, "problem.spectrum");
  if (pj.contains("center")) c.problem.center = to_vec(pj["center"], c.problem.n, "problem.center");
  c.problem.nu = num_or(pj, "nu", 0.5, "problem.");
  c.problem.rho = num_or(pj, "rho", 4.0, "problem.");
  if (pj.contains("c")) c.problem.c = to_vec(pj["c"], c.problem.n, "problem.c");

  const json& xj = require(j, "prox", "");
  c.prox.kind = require(xj, "kind", "prox.").get<std::string>();
  if (c.prox.kind != "ball2" && c.prox.kind != "box" && c.prox.kind != "simplex")
    throw ConfigError("prox.kind: expected ball2 | box | simplex");
  c.prox.radius = num_or(xj, "radius", 1.0, "prox.");
  if (xj.contains("center")) c.prox.center = to_vec(xj["center"], c.problem.n, "prox.center");
  if (xj.contains("lo")) c.prox.lo = to_vec(xj["lo"], c.problem.n, "prox.lo");
  if (xj.contains("hi")) c.prox.hi = to_vec(xj["hi"], c.problem.n, "prox.hi");
  if (xj.contains("start")) c.prox.start = to_vec(xj["start"], c.problem.n, "prox.start");

  if (j.contains("oracle")) {
    const json& oj = j["oracle"];
    c.oracle.kind = str_or(oj, "kind", "first_order", "oracle.");
    c.oracle.delta = num_or(oj, "delta", 0.0, "oracle.");
    c.oracle.D = num_or(oj, "D", 0.0, "oracle.");
    c.oracle.noise_bound = num_or(oj, "noise_bound", 0.0, "oracle.");
    c.oracle.bias_kind = str_or(oj, "bias_kind", "sine", "oracle.");
    c.oracle.bias_scale = num_or(oj, "bias_scale", 1.0, "oracle.");
    c.oracle.grad_bias = num_or(oj, "grad_bias", 0.0, "oracle.");
    c.oracle.k = static_cast<int>(num_or(oj, "k", 2, "oracle."));
    c.oracle.batch = static_cast<long long>(num_or(oj, "batch", 0, "oracle."));
    c.oracle.tag_delta = num_or(oj, "tag_delta", 0.0, "oracle.");
    if (c.oracle.delta < 0 || c.oracle.D < 0) throw ConfigError("oracle: delta and D must be >= 0");
    if (c.oracle.bias_kind != "none" && c.oracle.bias_kind != "sine")
      throw ConfigError("oracle.bias_kind: expected none | sine");
  }

  const json& sj = require(j, "solver", "");
  c.solver.family = require(sj, "family", "solver.").get<std::string>();
  static const char* families[] = {"igm", "igm_restart", "igm_universal",
                                   "zo_two_point", "zo_k_point", "zo_directional"};
  bool known = false;
  for (const char* f : families) known = known || c.solver.family == f;
  if (!known) throw ConfigError("solver.family: unknown family '" + c.solver.family + "'");
  c.solver.p = num_or(sj, "p", 1.0, "solver.");
  if (c.solver.p < 0 || c.solver.p > 1) throw ConfigError("solver.p: must lie in [0,1]");
  const json& ej = require(sj, "eps", "solver.");
  if (ej.is_number()) c.solver.eps = {ej.get<double>()};
  else if (ej.is_array())
    for (const auto& e : ej) c.solver.eps.push_back(e.get<double>());
  else throw ConfigError("solver.eps: expected number or array");
  for (double e : c.solver.eps)
    if (e <= 0) throw ConfigError("solver.eps: entries must be positive");
  c.solver.max_iters = static_cast<long long>(num_or(sj, "max_iters", 0, "solver."));
  c.solver.max_calls = static_cast<long long>(num_or(sj, "max_calls", -1, "solver."));
  c.solver.tau = num_or(sj, "tau", 0.0, "solver.");
  c.solver.L = num_or(sj, "L", 0.0, "solver.");
  c.solver.L0 = num_or(sj, "L0", 1.0, "solver.");

  const json& seeds = require(j, "seeds", "");
  if (seeds.is_number()) c.seeds = {seeds.get<std::uint64_t>()};
  else if (seeds.is_array())
    for (const auto& s : seeds) c.seeds.push_back(s.get<std::uint64_t>());
  else throw ConfigError("seeds: expected number or array");
  if (c.seeds.empty()) throw ConfigError("seeds: must be non-empty");

  c.C = num_or(j, "constant_C", 10.0, "");
  if (c.C <= 0) throw ConfigError("constant_C: must be positive");
  c.output_dir = str_or(j, "output_dir", "out", "");
  if (j.contains("timings")) c.timings = j["timings"].get<bool>();

  if (const char* env = std::getenv("OPT_SEED"); env && *env) {
    c.seeds = {std::strtoull(env, nullptr, 10)};
  }

  c.echo = j.dump(2);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_config_text(os.str());
}

}  // namespace sco
