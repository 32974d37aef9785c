#include "sco/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "sco/fit.hpp"
#include "sco/problems.hpp"
#include "sco/svgplot.hpp"

namespace sco {

namespace fs = std::filesystem;
using nlohmann::json;

ProxSetup make_setup(const ExperimentConfig& c) {
  const int n = c.problem.n;
  if (c.prox.kind == "ball2") {
    Vec center = c.prox.center.empty() ? Vec(n, 0.0) : c.prox.center;
    return ProxSetup::ball(center, c.prox.radius);
  }
  if (c.prox.kind == "box") {
    Vec lo = c.prox.lo.empty() ? Vec(n, 0.0) : c.prox.lo;
    Vec hi = c.prox.hi.empty() ? Vec(n, 1.0) : c.prox.hi;
    return ProxSetup::box_set(lo, hi);
  }
  if (c.prox.kind == "simplex") return ProxSetup::simplex(n);
  throw ConfigError("prox.kind: unknown kind '" + c.prox.kind + "'");
}

TestProblem make_problem(const ExperimentConfig& c, const ProxSetup& setup) {
  const int n = c.problem.n;
  if (c.problem.name == "quadratic") {
    Vec spec = c.problem.spectrum.empty() ? Vec(n, 1.0) : c.problem.spectrum;
    Vec center = c.problem.center.empty() ? Vec(n, 0.0) : c.problem.center;
    return quadratic(n, spec, center, setup);
  }
  if (c.problem.name == "holder_power") return holder_power(n, c.problem.nu, setup);
  if (c.problem.name == "nonsmooth_abs") {
    Vec cv = c.problem.c.empty() ? unit(n, 0) : c.problem.c;
    return nonsmooth_abs(n, cv, setup);
  }
  if (c.problem.name == "uniformly_convex_power")
    return uniformly_convex_power(n, c.problem.rho, setup);
  throw ConfigError("problem.name: unknown problem '" + c.problem.name + "'");
}

double solver_L(const ExperimentConfig& c, const TestProblem& pb) {
  if (c.solver.L > 0) return c.solver.L;
  if (c.oracle.tag_delta > 0) {
    if (!pb.constants.nu || !pb.constants.L_nu)
      throw ConfigError("oracle.tag_delta set but the problem has no Holder certificate");
    return holder_to_smooth(*pb.constants.L_nu, *pb.constants.nu, c.oracle.tag_delta);
  }
  if (pb.constants.L) return *pb.constants.L;
  throw ConfigError("solver.L: no explicit L and the problem declares none");
}

namespace {

NoiseModel make_noise(const ExperimentConfig& c) {
  NoiseModel nm;
  nm.delta = c.oracle.delta;
  nm.bias_kind = c.oracle.bias_kind == "none" ? BiasKind::none : BiasKind::sine;
  nm.bias_scale = c.oracle.bias_scale;
  nm.grad_bias = c.oracle.grad_bias;
  return nm;
}

bool is_zo_family(const std::string& f) {
  return f == "zo_two_point" || f == "zo_k_point" || f == "zo_directional";
}

FirstOrderOracle make_fo_oracle(const ExperimentConfig& c, const TestProblem& pb,
                                std::uint64_t seed) {
  FirstOrderOracle o(pb, make_noise(c), c.oracle.D, c.oracle.noise_bound, seed,
                     CounterRng::stream_id(0, "fo-oracle"));
  if (c.oracle.tag_delta > 0) {
    if (!pb.constants.nu || !pb.constants.L_nu)
      throw ConfigError("oracle.tag_delta set but the problem has no Holder certificate");
    o.tag(c.oracle.tag_delta,
          holder_to_smooth(*pb.constants.L_nu, *pb.constants.nu, c.oracle.tag_delta));
  }
  return o;
}

}  // namespace

Budget family_budget(const ExperimentConfig& c, const TestProblem& pb, const ProxSetup& setup,
                     double eps) {
  const double L = solver_L(c, pb);
  const double R = setup.R;
  const std::string& fam = c.solver.family;
  if (fam == "igm") return thm1_budget(c.solver.p, L, R, c.oracle.D, eps, c.C);
  if (fam == "igm_restart") {
    if (pb.constants.mu2 <= 0) throw ConfigError("igm_restart requires a strongly convex problem");
    return thm1_sc_budget(c.solver.p, L, pb.constants.mu2, c.oracle.D, R, eps, c.C);
  }
  if (fam == "igm_universal") {
    if (!pb.constants.nu || !pb.constants.L_nu)
      throw ConfigError("igm_universal budget needs the problem's Holder certificate");
    return cor1_budget(c.solver.p, {{*pb.constants.nu, *pb.constants.L_nu}}, R, eps, c.C);
  }
  if (fam == "zo_directional")
    return thm3_budget(c.solver.p, pb.dim, L, R, c.oracle.D, eps, c.C, c.oracle.k);
  if (is_zo_family(fam))
    return thm2_budget(c.solver.p, pb.dim, L, R, c.oracle.D, eps, c.C,
                       fam == "zo_two_point" ? 2 : c.oracle.k);
  throw ConfigError("solver.family: unknown family '" + fam + "'");
}

RunRecord run_single(const ExperimentConfig& c, const TestProblem& pb, const ProxSetup& setup,
                     std::uint64_t seed, double eps_target, long long iter_cap) {
  const double eps_budget = eps_target > 0 ? eps_target : c.solver.eps.front();
  const Budget b = family_budget(c, pb, setup, eps_budget);
  long long max_iters = iter_cap > 0 ? iter_cap
                        : c.solver.max_iters > 0
                            ? c.solver.max_iters
                            : (eps_target > 0 ? 3 * b.iterations + 16 : b.iterations);
  const std::string& fam = c.solver.family;

  RunRecord rec;
  if (fam == "igm" || fam == "igm_restart" || fam == "igm_universal") {
    FirstOrderOracle oracle = make_fo_oracle(c, pb, seed);
    IGMConfig cfg;
    cfg.p = c.solver.p;
    cfg.L = solver_L(c, pb);
    cfg.target_eps = eps_target;
    cfg.max_iters = max_iters;
    cfg.max_calls = c.solver.max_calls;
    cfg.batch = c.oracle.batch > 0 ? c.oracle.batch : b.batch;
    cfg.delta_budget = b.delta_max;
    cfg.start = c.prox.start;
    cfg.L0 = c.solver.L0;
    if (fam == "igm") {
      rec = igm_run(oracle, setup, cfg);
    } else if (fam == "igm_restart") {
      cfg.target_eps = eps_budget;
      RestartConfig rc;
      rc.inner = cfg;
      rc.mu2 = pb.constants.mu2;
      rc.D = c.oracle.D;
      rc.C = c.C;
      rc.batch_fixed = c.oracle.batch;
      rec = igm_restart(oracle, setup, rc);
    } else {
      cfg.target_eps = eps_budget;
      rec = igm_universal(oracle, setup, cfg);
    }
  } else if (is_zo_family(fam)) {
    ZOConfig zc;
    zc.p = c.solver.p;
    zc.L = solver_L(c, pb);
    zc.tau = c.solver.tau;
    zc.k = fam == "zo_two_point" ? 2 : c.oracle.k;
    zc.batch = c.oracle.batch;
    zc.target_eps = eps_target;
    zc.max_iters = max_iters;
    zc.max_calls = c.solver.max_calls;
    zc.C = c.C;
    zc.estimator = fam == "zo_two_point"    ? ZoEstimator::two_point
                   : fam == "zo_k_point"    ? ZoEstimator::k_point
                                            : ZoEstimator::directional;
    rec = zo_run(pb, make_noise(c), c.oracle.D, c.oracle.noise_bound, setup, zc, seed);
  } else {
    throw ConfigError("solver.family: unknown family '" + fam + "'");
  }
  rec.seed = seed;
  rec.config_echo = c.echo;
  return rec;
}

RunOutput cmd_run(const ExperimentConfig& c, std::ostream& log) {
  const ProxSetup setup = make_setup(c);
  const TestProblem pb = make_problem(c, setup);
  const std::string h = hash_hex(content_hash(c.echo));
  fs::create_directories(c.output_dir);

  RunOutput out;
  out.hash = h;
  json manifest;
  manifest["config"] = json::parse(c.echo);
  manifest["config_hash"] = h;
  manifest["rng"] = "splitmix64-counter-v1";
  json runs = json::array();

  for (std::uint64_t seed : c.seeds) {
    RunRecord rec = run_single(c, pb, setup, seed, c.solver.eps.front());
    const std::string path =
        (fs::path(c.output_dir) / ("run_" + h + "_seed" + std::to_string(seed) + ".csv")).string();
    write_file(path, run_csv(rec, c.timings));
    out.csv_paths.push_back(path);

    // held-out value estimate at the final point (measurement only; its own
    // oracle so solver call accounting is untouched)
    FirstOrderOracle meter(pb, NoiseModel{}, c.oracle.D, c.oracle.noise_bound, seed,
                           CounterRng::stream_id(3, "gap-estimate"));
    const double f_est = meter.value_query(rec.final_point, 64);

    json r;
    r["seed"] = seed;
    r["calls"] = rec.total_calls;
    r["iterations"] = rec.iterations;
    r["final_gap"] = rec.final_gap;
    r["gap_estimate"] = f_est - pb.f_star;
    r["reached_target"] = rec.reached_target;
    r["file"] = fs::path(path).filename().string();
    for (const auto& w : rec.warnings) r["warnings"].push_back(w);
    runs.push_back(r);
    log << "run seed=" << seed << " calls=" << rec.total_calls << " gap=" << fmt_double(rec.final_gap)
        << (rec.reached_target ? " (target reached)" : "") << "\n";
  }
  manifest["runs"] = runs;
  out.manifest_path = (fs::path(c.output_dir) / ("manifest_" + h + ".json")).string();
  write_file(out.manifest_path, manifest.dump(2) + "\n");
  return out;
}

std::string SweepReport::to_text() const {
  std::ostringstream os;
  os << "sweep axis=" << axis << " fitted=" << fmt_double(fitted_slope) << " +- "
     << fmt_double(2 * se_slope) << " theory=" << fmt_double(theory_slope)
     << " tol=" << fmt_double(tolerance) << (divergent ? " DIVERGENT" : "")
     << (pass ? " PASS" : " FAIL") << "\n";
  return os.str();
}

std::string SweepReport::to_json() const {
  json j;
  j["axis"] = axis;
  j["fitted_slope"] = fitted_slope;
  j["se_slope"] = se_slope;
  j["theory_slope"] = theory_slope;
  j["tolerance"] = tolerance;
  j["divergent"] = divergent;
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

namespace {

double default_sweep_tolerance(const ExperimentConfig& c, const TestProblem& pb, bool n_axis) {
  if (n_axis) return 0.3;
  if (c.oracle.D > 0) return 0.2;
  if (c.solver.family == "igm_universal") return 0.15;
  if (pb.constants.nu && *pb.constants.nu < 1.0) return 0.15;
  return 0.1;
}

}  // namespace

SweepReport cmd_sweep(const ExperimentConfig& c, std::vector<double> eps_grid,
                      const std::vector<int>& n_grid, std::optional<double> tol_override,
                      std::ostream& log) {
  SweepReport rep;
  const bool n_axis = !n_grid.empty();
  rep.axis = n_axis ? "n" : "eps";

  if (!n_axis) {
    if (eps_grid.empty()) eps_grid = c.solver.eps;
    if (eps_grid.size() < 4) throw ConfigError("sweep: need >= 4 eps grid points");
    std::sort(eps_grid.begin(), eps_grid.end(), std::greater<>());
    const double eps_min = eps_grid.back();

    const ProxSetup setup = make_setup(c);
    const TestProblem pb = make_problem(c, setup);
    rep.tolerance = tol_override ? *tol_override : default_sweep_tolerance(c, pb, false);
    const Budget bmin = family_budget(c, pb, setup, eps_min);

    ExperimentConfig cc = c;
    cc.solver.max_calls = 100 * bmin.oracle_calls;
    const long long cap = 100 * bmin.iterations;

    for (std::uint64_t seed : c.seeds) {
      RunRecord rec = run_single(cc, pb, setup, seed, eps_min, cap);
      for (double eps : eps_grid) {
        SweepRow row;
        row.eps = eps;
        row.seed = seed;
        row.calls = rec.calls_to_reach(eps);
        if (row.calls < 0) {
          rep.divergent = true;
          row.iterations = rec.iterations;
          row.gap = rec.final_gap;
        } else {
          for (const auto& r : rec.rows)
            if (r.gap <= eps) {
              row.iterations = r.k;
              row.gap = r.gap;
              break;
            }
        }
        rep.rows.push_back(row);
      }
      log << "sweep seed=" << seed << " calls=" << rec.total_calls << "\n";
    }

    if (!rep.divergent) {
      std::vector<double> xs, ys, tx, ty;
      for (double eps : eps_grid) {
        std::vector<double> calls;
        for (const auto& r : rep.rows)
          if (r.eps == eps && r.calls >= 1) calls.push_back(static_cast<double>(r.calls));
        xs.push_back(1.0 / eps);
        ys.push_back(std::max(median(calls), 1.0));
        tx.push_back(1.0 / eps);
        ty.push_back(family_budget(c, pb, setup, eps).calls_real);
      }
      const LineFit f = fit_loglog(xs, ys);
      const LineFit t = fit_loglog(tx, ty);
      rep.fitted_slope = f.slope;
      rep.se_slope = f.se_slope;
      rep.theory_slope = t.slope;
      rep.pass = std::fabs(rep.fitted_slope - rep.theory_slope) <= rep.tolerance;
    }
  } else {
    if (n_grid.size() < 3) throw ConfigError("sweep: need >= 3 n grid points");
    const double eps = eps_grid.empty() ? c.solver.eps.front() : eps_grid.front();
    rep.tolerance = tol_override ? *tol_override : 0.3;

    std::vector<double> xs, ys, tx, ty;
    for (int n : n_grid) {
      json patched = json::parse(c.echo);
      patched["problem"]["n"] = n;
      ExperimentConfig cn = parse_config_text(patched.dump());
      const ProxSetup setup = make_setup(cn);
      const TestProblem pb = make_problem(cn, setup);
      const Budget bn = family_budget(cn, pb, setup, eps);

      ExperimentConfig cc = cn;
      cc.solver.max_calls = 100 * bn.oracle_calls;
      std::vector<double> calls;
      for (std::uint64_t seed : cn.seeds) {
        RunRecord rec = run_single(cc, pb, setup, seed, eps, 100 * bn.iterations);
        const long long cr = rec.calls_to_reach(eps);
        SweepRow row;
        row.eps = n;  // grid value in the first column; axis recorded in the report
        row.seed = seed;
        row.calls = cr;
        row.iterations = rec.iterations;
        row.gap = rec.final_gap;
        rep.rows.push_back(row);
        if (cr < 0) rep.divergent = true;
        else calls.push_back(static_cast<double>(cr));
        log << "sweep n=" << n << " seed=" << seed << " calls=" << cr << "\n";
      }
      if (!calls.empty()) {
        xs.push_back(n);
        ys.push_back(median(calls));
        tx.push_back(n);
        ty.push_back(bn.calls_real);
      }
    }
    if (!rep.divergent && xs.size() >= 3) {
      const LineFit f = fit_loglog(xs, ys);
      const LineFit t = fit_loglog(tx, ty);
      rep.fitted_slope = f.slope;
      rep.se_slope = f.se_slope;
      rep.theory_slope = t.slope;
      rep.pass = std::fabs(rep.fitted_slope - rep.theory_slope) <= rep.tolerance;
    }
  }

  fs::create_directories(c.output_dir);
  const std::string h = hash_hex(content_hash(c.echo));
  write_file((fs::path(c.output_dir) / ("sweep_" + h + ".csv")).string(), sweep_csv(rep.rows));
  write_file((fs::path(c.output_dir) / ("sweep_" + h + ".json")).string(), rep.to_json());
  return rep;
}

int cmd_validate(const ExperimentConfig& c, std::ostream& out, int pairs, int draws_per_point) {
  const ProxSetup setup = make_setup(c);
  const TestProblem pb = make_problem(c, setup);
  bool ok = true;

  if (c.oracle.kind == "zeroth_order") {
    // value-noise bound: |reply - f(x, xi)| <= 2 delta
    ZeroOrderOracle zo(pb, make_noise(c), c.oracle.D, c.oracle.noise_bound,
                       std::clamp(c.oracle.k, 2, pb.dim + 1), c.seeds.front(),
                       CounterRng::stream_id(0, "validate-zo"));
    CounterRng rng(c.seeds.front(), CounterRng::stream_id(0, "validate-zo-pts"));
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
      auto h = zo.open();
      const Vec x = sample_in(setup, rng);
      const double reply = h.eval(x);
      const double truth = pb.f(x) + dot(h.xi(), x);
      worst = std::max(worst, std::fabs(reply - truth));
    }
    const bool bound_ok = worst <= 2.0 * c.oracle.delta + 1e-12;
    out << "zo noise bound: max |reply - f(x,xi)| = " << fmt_double(worst) << " vs 2*delta = "
        << fmt_double(2.0 * c.oracle.delta) << (bound_ok ? " pass" : " FAIL") << "\n";
    ok = ok && bound_ok;
  }

  FirstOrderOracle oracle = make_fo_oracle(c, pb, c.seeds.front());
  OracleClaim claim;
  claim.D = c.oracle.D;
  if (oracle.tagged()) {
    claim.delta = oracle.tagged()->delta;
    claim.L = oracle.tagged()->L;
    claim.mu = 0.0;
  } else {
    claim.delta = c.oracle.delta;  // value-bias magnitude; upper side only
    claim.L = solver_L(c, pb);
    claim.mu = pb.constants.mu2;
  }
  if (draws_per_point <= 0) draws_per_point = (c.oracle.D > 0 || c.oracle.delta > 0) ? 64 : 1;
  CounterRng rng(c.seeds.front(), CounterRng::stream_id(0, "validate-pairs"));
  const ValidationReport rep = validate_assumption1(oracle, claim, pairs, draws_per_point, rng);
  out << "assumption-1 sandwich (delta=" << fmt_double(claim.delta) << ", L=" << fmt_double(claim.L)
      << ", mu=" << fmt_double(claim.mu) << ", D=" << fmt_double(claim.D) << "): " << rep.summary()
      << "\n";
  ok = ok && rep.pass;
  return ok ? 0 : 4;
}

QuantileReport cmd_quantile(const ExperimentConfig& c, double sigma, int min_seeds,
                            std::ostream& log) {
  if (sigma <= 0 || sigma >= 1) throw ConfigError("quantile: sigma must lie in (0,1)");
  std::vector<std::uint64_t> seeds = c.seeds;
  if (static_cast<int>(seeds.size()) < min_seeds) {
    seeds.clear();
    for (int i = 1; i <= min_seeds; ++i) seeds.push_back(i);
  }
  const ProxSetup setup = make_setup(c);
  const TestProblem pb = make_problem(c, setup);
  const double eps = c.solver.eps.front();

  QuantileReport q;
  q.eps = eps;
  q.sigma = sigma;
  q.seeds = static_cast<int>(seeds.size());
  const Budget b = family_budget(c, pb, setup, eps);
  q.call_cap = 3 * high_prob_calls(static_cast<double>(b.oracle_calls), sigma, eps);

  ExperimentConfig cc = c;
  cc.solver.max_calls = q.call_cap;
  std::vector<double> gaps;
  for (std::uint64_t seed : seeds) {
    RunRecord rec = run_single(cc, pb, setup, seed, /*eps_target=*/0.0,
                               /*iter_cap=*/q.call_cap + 16);
    gaps.push_back(rec.final_gap);
  }
  q.gap_quantile = quantile(gaps, 1.0 - sigma);
  q.pass = q.gap_quantile <= eps;
  log << "quantile(" << 1.0 - sigma << ") over " << q.seeds << " seeds after " << q.call_cap
      << " calls: " << fmt_double(q.gap_quantile) << " vs eps " << fmt_double(eps)
      << (q.pass ? " PASS" : " FAIL") << "\n";
  return q;
}

namespace {

void budget_row(std::ostringstream& text, std::ostringstream& csv, const std::string& name,
                const Budget& b) {
  text << name << ": calls=" << b.oracle_calls << " iterations=" << b.iterations
       << " batch=" << b.batch << " delta_max=" << fmt_double(b.delta_max) << " dominated_by="
       << (b.dominating == Budget::Dominating::variance ? "variance" : "deterministic");
  if (b.argmin_nu) text << " argmin_nu=" << fmt_double(*b.argmin_nu);
  if (b.display_mismatch)
    text << "  [note: printed iteration display disagrees (" << fmt_double(*b.iters_alt_display)
         << "); the call-bound log argument is used]";
  text << "\n";
  csv << name << ',' << b.oracle_calls << ',' << b.iterations << ',' << b.batch << ','
      << fmt_double(b.delta_max) << ','
      << (b.dominating == Budget::Dominating::variance ? "variance" : "deterministic") << '\n';
}

}  // namespace

std::string budget_table(const BudgetQuery& q) {
  std::ostringstream text, csv;
  csv << "family,calls,iterations,batch,delta_max,dominating\n";
  Budget b;
  if (q.theorem == "thm1") {
    b = thm1_budget(q.p, q.L, q.R, q.D, q.eps, q.C);
    budget_row(text, csv, "thm1", b);
  } else if (q.theorem == "thm1_sc") {
    if (!q.mu2) throw ConfigError("budget thm1_sc: --mu2 required");
    b = thm1_sc_budget(q.p, q.L, *q.mu2, q.D2 > 0 ? q.D2 : q.D, q.R, q.eps, q.C);
    budget_row(text, csv, "thm1_sc", b);
  } else if (q.theorem == "thm2" || q.theorem == "thm3") {
    if (q.n < 1) throw ConfigError("budget " + q.theorem + ": --n required");
    b = q.theorem == "thm2" ? thm2_budget(q.p, q.n, q.L, q.R, q.D, q.eps, q.C, q.k, q.mu2)
                            : thm3_budget(q.p, q.n, q.L, q.R, q.D, q.eps, q.C, q.k, q.mu2);
    budget_row(text, csv, q.theorem, b);
  } else if (q.theorem == "cor1") {
    b = cor1_budget(q.p, {{q.nu, q.L_nu}}, q.R, q.eps, q.C, q.mu2);
    budget_row(text, csv, "cor1", b);
  } else if (q.theorem == "cor2") {
    b = cor2_budget(q.p, q.nu, q.L_nu, q.R, q.D, q.eps, q.C, q.mu2, q.D2);
    budget_row(text, csv, "cor2", b);
  } else if (q.theorem == "remark3") {
    const IterationPair it = remark3_iterations(q.p, q.L, q.R, q.M, q.eps, q.mu2, q.C);
    text << "remark3: iterations=" << fmt_double(it.total) << " (smooth term "
         << fmt_double(it.smooth_term) << " + M term " << fmt_double(it.m_term) << ")\n";
    csv << "remark3," << fmt_double(it.total) << ",,,,\n";
    return q.csv ? csv.str() : text.str();
  } else if (q.theorem == "uniform_convex") {
    b = uniform_convex_budget(q.p, q.rho, q.kappa, q.delta, q.L, q.D2 > 0 ? q.D2 : q.D, q.R,
                              q.eps, q.C);
    budget_row(text, csv, "uniform_convex", b);
  } else if (q.theorem == "high_prob") {
    if (q.sigma <= 0) throw ConfigError("budget high_prob: --sigma required");
    const Budget base = thm1_budget(q.p, q.L, q.R, q.D, q.eps, q.C);
    const long long calls = high_prob_calls(static_cast<double>(base.oracle_calls), q.sigma, q.eps);
    text << "high_prob: calls=" << calls << " (base " << base.oracle_calls << ")\n";
    csv << "high_prob," << calls << ",,,,\n";
    return q.csv ? csv.str() : text.str();
  } else {
    throw ConfigError("budget: unknown family '" + q.theorem + "'");
  }

  const bool deterministic = b.dominating == Budget::Dominating::deterministic;
  if (deterministic && q.n > 0 && b.oracle_calls > q.n &&
      (q.theorem == "thm1" || q.theorem == "thm1_sc" || q.theorem == "cor1" || q.theorem == "cor2"))
    text << "warning: deterministic call count exceeds the dimension n=" << q.n
         << "; this bound regime assumes N(eps) <= n\n";
  return q.csv ? csv.str() : text.str();
}

int cmd_plot(const std::vector<std::string>& csv_paths, const std::string& out_dir,
             std::ostream& log) {
  if (csv_paths.empty()) {
    log << "plot: no input files, nothing to do\n";
    return 0;
  }
  fs::create_directories(out_dir);
  for (const auto& path : csv_paths) {
    const CsvTable t = parse_csv(read_file(path));
    const std::string stem = fs::path(path).stem().string();
    if (t.header == std::vector<std::string>{"k", "calls", "gap", "walltime_ns"}) {
      PlotSeries s;
      s.label = stem;
      for (const auto& r : t.rows) {
        if (r[0] <= 0 || r[2] <= 0) continue;
        s.x.push_back(r[0]);
        s.y.push_back(r[2]);
      }
      std::vector<PlotLine> lines;
      if (s.x.size() >= 4) {
        // natural-log fit: slope carries over to log10/log10, intercept rescales
        const LineFit f = fit_loglog(s.x, s.y);
        lines.push_back({f.slope, f.intercept / std::log(10.0), "fit", "#d62728"});
      }
      const std::string out = (fs::path(out_dir) / (stem + "_gap.svg")).string();
      write_file(out, loglog_svg({s}, lines, "iteration", "gap", stem));
      log << "plot: wrote " << out << "\n";
    } else if (t.header == std::vector<std::string>{"eps", "seed", "calls", "iterations", "gap"}) {
      std::vector<double> grid;
      for (const auto& r : t.rows)
        if (std::find(grid.begin(), grid.end(), r[0]) == grid.end()) grid.push_back(r[0]);
      PlotSeries s;
      s.label = stem;
      for (double g : grid) {
        std::vector<double> calls;
        for (const auto& r : t.rows)
          if (r[0] == g && r[2] > 0) calls.push_back(r[2]);
        if (calls.empty()) continue;
        s.x.push_back(1.0 / g);
        s.y.push_back(median(calls));
      }
      std::vector<PlotLine> lines;
      if (s.x.size() >= 2) {
        const LineFit f = fit_loglog(s.x, s.y);
        lines.push_back({f.slope, f.intercept / std::log(10.0), "fit", "#d62728"});
      }
      // companion report carries the predicted slope
      const std::string rep_path = (fs::path(path).parent_path() / (stem + ".json")).string();
      if (fs::exists(rep_path)) {
        const json rj = json::parse(read_file(rep_path));
        if (rj.contains("theory_slope") && s.x.size() >= 2) {
          const double ts = rj["theory_slope"].get<double>();
          const double anchor = std::log10(s.y.front()) - ts * std::log10(s.x.front());
          lines.push_back({ts, anchor, "theory", "#2ca02c"});
        }
      }
      const std::string out = (fs::path(out_dir) / (stem + "_calls.svg")).string();
      write_file(out, loglog_svg({s}, lines, "1/eps", "calls", stem));
      log << "plot: wrote " << out << "\n";
    } else {
      throw ConfigError("plot: unrecognized CSV schema in " + path);
    }
  }
  return 0;
}

}  // namespace sco
