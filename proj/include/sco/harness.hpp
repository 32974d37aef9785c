#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sco/budget.hpp"
#include "sco/config.hpp"
#include "sco/csv.hpp"
#include "sco/igm.hpp"
#include "sco/zo.hpp"

namespace sco {

ProxSetup make_setup(const ExperimentConfig& c);
TestProblem make_problem(const ExperimentConfig& c, const ProxSetup& setup);

// Effective gradient constant the solver is told: the explicit config value,
// the tagged smoothed constant, or the problem certificate, in that order.
double solver_L(const ExperimentConfig& c, const TestProblem& pb);

// The bound applicable to the configured solver family at accuracy eps.
Budget family_budget(const ExperimentConfig& c, const TestProblem& pb, const ProxSetup& setup,
                     double eps);

// One solver run. eps_target <= 0 runs the full budgeted iteration count;
// iter_cap > 0 overrides the automatic 3x-budget iteration cap.
RunRecord run_single(const ExperimentConfig& c, const TestProblem& pb, const ProxSetup& setup,
                     std::uint64_t seed, double eps_target, long long iter_cap = 0);

struct RunOutput {
  std::vector<std::string> csv_paths;
  std::string manifest_path;
  std::string hash;
};
RunOutput cmd_run(const ExperimentConfig& c, std::ostream& log);

struct SweepReport {
  std::string axis = "eps";  // the fitted grid axis: eps or n
  std::vector<SweepRow> rows;
  double fitted_slope = 0.0;
  double se_slope = 0.0;
  double theory_slope = 0.0;
  double tolerance = 0.0;
  bool divergent = false;
  bool pass = false;

  std::string to_text() const;
  std::string to_json() const;
};

// Calls-to-target over an eps grid (or an n grid at fixed eps), median over
// seeds, log-log slope against the budget module's prediction.
SweepReport cmd_sweep(const ExperimentConfig& c, std::vector<double> eps_grid,
                      const std::vector<int>& n_grid, std::optional<double> tol_override,
                      std::ostream& log);

// Oracle contract checks; returns 0 on pass, 4 on violation.
int cmd_validate(const ExperimentConfig& c, std::ostream& out, int pairs = 1000,
                 int draws_per_point = 0);

struct QuantileReport {
  double eps = 0.0;
  double sigma = 0.0;
  int seeds = 0;
  long long call_cap = 0;
  double gap_quantile = 0.0;
  bool pass = false;
};
QuantileReport cmd_quantile(const ExperimentConfig& c, double sigma, int min_seeds,
                            std::ostream& log);

struct BudgetQuery {
  std::string theorem = "thm1";  // thm1 | thm1_sc | thm2 | thm3 | cor1 | cor2 |
                                 // remark3 | uniform_convex | high_prob
  double p = 1.0, L = 1.0, R = 1.0, D = 0.0, eps = 1e-3, C = 10.0;
  int n = 0, k = 2;
  std::optional<double> mu2;
  double D2 = 0.0;
  double nu = 1.0, L_nu = 1.0, M = 0.0;
  double rho = 2.0, kappa = 1.0, delta = 1e-3;
  double sigma = 0.0;
  bool csv = false;
};
std::string budget_table(const BudgetQuery& q);

// gap-vs-iteration and calls-vs-accuracy SVG plots from run/sweep CSV files.
int cmd_plot(const std::vector<std::string>& csv_paths, const std::string& out_dir,
             std::ostream& log);

}  // namespace sco
