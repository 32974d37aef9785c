#include "sco/igm.hpp"

#include <cmath>

namespace sco {

long long RunRecord::calls_to_reach(double eps) const {
  for (const auto& r : rows)
    if (r.gap <= eps) return r.calls;
  return -1;
}

namespace {

Vec start_point(const ProxSetup& setup, const IGMConfig& cfg) {
  Vec x0 = cfg.start.empty() ? setup.center : cfg.start;
  if (!contains(setup, x0, 1e-9)) throw SolverError("start point outside the feasible set");
  return x0;
}

}  // namespace

RunRecord igm_core(const ProxSetup& setup, const IGMConfig& cfg,
                   const std::function<Vec(const Vec&)>& grad_at,
                   const std::function<double(const Vec&)>& gap_of,
                   const std::function<long long()>& calls_now) {
  if (cfg.L <= 0) throw SolverError("igm: L must be positive");
  if (cfg.p < 0 || cfg.p > 1) throw SolverError("igm: p must lie in [0,1]");

  RunRecord rec;
  Vec z = start_point(setup, cfg);
  Vec xbar = z;
  double A = 0.0;
  const double two_p = std::pow(2.0, cfg.p);

  rec.rows.push_back({0, gap_of(xbar), calls_now(), 0});
  rec.reached_target = cfg.target_eps > 0 && rec.rows.back().gap <= cfg.target_eps;

  for (long long k = 0; k < cfg.max_iters && !rec.reached_target; ++k) {
    if (cfg.max_calls >= 0 && calls_now() >= cfg.max_calls) break;
    const double a = std::pow(static_cast<double>(k + 1), cfg.p) / (two_p * cfg.L);
    const double A1 = A + a;
    const Vec y = combine(A / A1, xbar, a / A1, z);
    const Vec G = grad_at(y);
    if (!all_finite(G)) throw SolverError("igm: non-finite gradient reply");
    z = prox_step(setup, z, G, a);
    xbar = combine(A / A1, xbar, a / A1, z);
    if (!all_finite(xbar)) throw SolverError("igm: non-finite iterate (misconfigured L?)");
    A = A1;
    if (cfg.observer) cfg.observer(k + 1, y, z, xbar);
    rec.rows.push_back({k + 1, gap_of(xbar), calls_now(), 0});
    rec.iterations = k + 1;
    if (cfg.target_eps > 0 && rec.rows.back().gap <= cfg.target_eps) rec.reached_target = true;
  }

  rec.final_point = xbar;
  rec.final_gap = rec.rows.back().gap;
  rec.total_calls = rec.rows.back().calls;
  rec.A_final = A;
  return rec;
}

RunRecord igm_run(FirstOrderOracle& oracle, const ProxSetup& setup, const IGMConfig& cfg) {
  const TestProblem& pb = oracle.problem();
  auto grad_at = [&](const Vec& y) { return oracle.query(y, cfg.batch).G; };
  auto gap_of = [&](const Vec& x) { return pb.gap(x); };
  auto calls = [&]() { return oracle.counter().total_calls; };
  return igm_core(setup, cfg, grad_at, gap_of, calls);
}

RunRecord igm_restart(FirstOrderOracle& oracle, const ProxSetup& setup, const RestartConfig& cfg) {
  if (cfg.mu2 <= 0) throw SolverError("igm_restart: mu2 must be positive");
  if (setup.norm != Norm::euclidean) throw SolverError("igm_restart: euclidean prox required");
  const IGMConfig& in = cfg.inner;
  if (in.target_eps <= 0) throw SolverError("igm_restart: target_eps must be positive");

  const TestProblem& pb = oracle.problem();
  const double R0sq = setup.R * setup.R;
  const double log_arg = cfg.mu2 * R0sq / in.target_eps;
  const long long stages =
      std::max<long long>(1, static_cast<long long>(std::ceil(std::log2(std::max(log_arg, 1.0)))));
  const long long inner_iters = std::max<long long>(
      1, static_cast<long long>(std::ceil(cfg.C * std::pow(in.L / cfg.mu2, 1.0 / (in.p + 1.0)))));

  RunRecord rec;
  Vec xhat = in.start.empty() ? setup.center : in.start;
  rec.rows.push_back({0, pb.gap(xhat), oracle.counter().total_calls, 0});
  long long k_global = 0;

  for (long long j = 1; j <= stages; ++j) {
    const double eps_j = std::max(in.target_eps, cfg.mu2 * R0sq * std::pow(2.0, -static_cast<double>(j)));
    long long batch_j = cfg.batch_fixed > 0 ? cfg.batch_fixed : 1;
    if (cfg.batch_fixed <= 0 && cfg.D > 0) {
      const double calls_var = cfg.C * cfg.D / (cfg.mu2 * eps_j);
      batch_j = std::max<long long>(1, static_cast<long long>(std::ceil(calls_var / inner_iters)));
    }

    // stages run their full budgeted length; only the global target stops early
    IGMConfig stage = in;
    stage.start = xhat;
    stage.batch = batch_j;
    stage.max_iters = inner_iters;
    stage.target_eps = cfg.stop_on_target ? in.target_eps : 0.0;
    RunRecord sr = igm_run(oracle, setup, stage);

    for (std::size_t i = 1; i < sr.rows.size(); ++i) {
      RunRow row = sr.rows[i];
      row.k = ++k_global;
      rec.rows.push_back(row);
    }
    xhat = sr.final_point;
    rec.A_final = sr.A_final;
    if (cfg.stop_on_target && pb.gap(xhat) <= in.target_eps) break;
  }

  rec.final_point = xhat;
  rec.final_gap = rec.rows.back().gap;
  rec.total_calls = rec.rows.back().calls;
  rec.iterations = k_global;
  rec.reached_target = rec.final_gap <= in.target_eps;
  return rec;
}

RunRecord igm_universal(FirstOrderOracle& oracle, const ProxSetup& setup, const IGMConfig& cfg) {
  if (cfg.target_eps <= 0) throw SolverError("igm_universal: target_eps must be positive");
  if (cfg.p < 0 || cfg.p > 1) throw SolverError("igm_universal: p must lie in [0,1]");
  const TestProblem& pb = oracle.problem();

  RunRecord rec;
  Vec z = start_point(setup, cfg);
  Vec xbar = z;
  double A = 0.0;
  double L_prev = cfg.L0 > 0 ? cfg.L0 : 1.0;
  const double two_p = std::pow(2.0, cfg.p);

  rec.rows.push_back({0, pb.gap(xbar), oracle.counter().total_calls, 0});
  rec.reached_target = rec.rows.back().gap <= cfg.target_eps;

  for (long long k = 0; k < cfg.max_iters && !rec.reached_target; ++k) {
    if (cfg.max_calls >= 0 && oracle.counter().total_calls >= cfg.max_calls) break;
    double L_trial = std::max(1e-12, 0.5 * L_prev);
    int doublings = 0;
    for (;;) {
      const double a = std::pow(static_cast<double>(k + 1), cfg.p) / (two_p * L_trial);
      const double A1 = A + a;
      const Vec y = combine(A / A1, xbar, a / A1, z);
      const FirstOrderReply ry = oracle.query(y, 1);
      const Vec z_trial = prox_step(setup, z, ry.G, a);
      const Vec x_trial = combine(A / A1, xbar, a / A1, z_trial);
      const double Fx = oracle.value_query(x_trial, 1);
      const Vec d = sub(x_trial, y);
      const double dist = norm_primal(setup, d);
      const double model = ry.F + dot(ry.G, d) + 0.5 * L_trial * dist * dist +
                           (a / A1) * 0.5 * cfg.target_eps;
      if (Fx <= model) {
        z = z_trial;
        xbar = x_trial;
        A = A1;
        L_prev = L_trial;
        rec.accepted_L.push_back(L_trial);
        if (cfg.observer) cfg.observer(k + 1, y, z, xbar);
        break;
      }
      L_trial *= 2.0;
      if (++doublings > cfg.max_doublings)
        throw SolverError("igm_universal: backtracking exceeded doubling limit");
    }
    rec.rows.push_back({k + 1, pb.gap(xbar), oracle.counter().total_calls, 0});
    rec.iterations = k + 1;
    if (rec.rows.back().gap <= cfg.target_eps) rec.reached_target = true;
  }

  rec.final_point = xbar;
  rec.final_gap = rec.rows.back().gap;
  rec.total_calls = rec.rows.back().calls;
  rec.A_final = A;
  return rec;
}

}  // namespace sco
