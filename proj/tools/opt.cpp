#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sco/harness.hpp"

namespace {

// exit codes: 0 pass, 2 config error, 3 solver error, 4 validation failure,
// 5 sweep slope failure

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> g;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) g.push_back(std::stod(tok));
  }
  return g;
}

std::vector<int> parse_int_grid(const std::string& csv) {
  std::vector<int> g;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) g.push_back(std::stoi(tok));
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark harness for first-order and gradient-free convex solvers with inexact oracles"};
  app.require_subcommand(1);

  std::string cfg_path, eps_csv, n_csv, out_dir = "plots";
  double sigma = 0.1;
  int seeds_min = 50;
  std::optional<double> tol;
  std::vector<std::string> plot_inputs;

  auto* run = app.add_subcommand("run", "execute one run per seed, write CSV + manifest");
  run->add_option("-c,--config", cfg_path, "JSON config")->required();

  auto* sweep = app.add_subcommand("sweep", "calls-to-target over a grid, slope vs theory");
  sweep->add_option("-c,--config", cfg_path, "JSON config")->required();
  sweep->add_option("--eps", eps_csv, "comma-separated eps grid (default: solver.eps)");
  sweep->add_option("--n", n_csv, "comma-separated n grid (fit the n axis instead)");
  double tol_val = -1;
  sweep->add_option("--tol", tol_val, "slope tolerance override");

  auto* validate = app.add_subcommand("validate", "oracle contract checks");
  validate->add_option("-c,--config", cfg_path, "JSON config")->required();
  int pairs = 1000;
  validate->add_option("--pairs", pairs, "sampled pairs");

  auto* budget = app.add_subcommand("budget", "evaluate complexity bounds");
  sco::BudgetQuery q;
  budget->add_option("--theorem", q.theorem, "thm1|thm1_sc|thm2|thm3|cor1|cor2|remark3|uniform_convex|high_prob");
  budget->add_option("--p", q.p);
  budget->add_option("--L", q.L);
  budget->add_option("--R", q.R);
  budget->add_option("--D", q.D);
  budget->add_option("--D2", q.D2);
  budget->add_option("--eps", q.eps);
  budget->add_option("--C", q.C);
  budget->add_option("--n", q.n);
  budget->add_option("--k", q.k);
  double mu2_val = -1;
  budget->add_option("--mu2", mu2_val);
  budget->add_option("--nu", q.nu);
  budget->add_option("--L_nu", q.L_nu);
  budget->add_option("--M", q.M);
  budget->add_option("--rho", q.rho);
  budget->add_option("--kappa", q.kappa);
  budget->add_option("--delta", q.delta);
  budget->add_option("--sigma", q.sigma);
  budget->add_flag("--csv", q.csv, "CSV output");

  auto* plot = app.add_subcommand("plot", "render SVG plots from run/sweep CSV files");
  plot->add_option("files", plot_inputs, "CSV files");
  plot->add_option("-o,--out", out_dir, "output directory");

  auto* quant = app.add_subcommand("quantile", "high-probability gap check over many seeds");
  quant->add_option("-c,--config", cfg_path, "JSON config")->required();
  quant->add_option("--sigma", sigma, "confidence level parameter");
  quant->add_option("--seeds", seeds_min, "minimum number of seeds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const sco::ExperimentConfig c = sco::load_config(cfg_path);
      const sco::RunOutput out = sco::cmd_run(c, std::cout);
      std::cout << "manifest: " << out.manifest_path << "\n";
      return 0;
    }
    if (sweep->parsed()) {
      const sco::ExperimentConfig c = sco::load_config(cfg_path);
      if (tol_val > 0) tol = tol_val;
      const sco::SweepReport rep =
          sco::cmd_sweep(c, parse_grid(eps_csv), parse_int_grid(n_csv), tol, std::cout);
      std::cout << rep.to_text();
      return rep.pass ? 0 : 5;
    }
    if (validate->parsed()) {
      const sco::ExperimentConfig c = sco::load_config(cfg_path);
      return sco::cmd_validate(c, std::cout, pairs);
    }
    if (budget->parsed()) {
      if (mu2_val > 0) q.mu2 = mu2_val;
      std::cout << sco::budget_table(q);
      return 0;
    }
    if (plot->parsed()) {
      return sco::cmd_plot(plot_inputs, out_dir, std::cout);
    }
    if (quant->parsed()) {
      const sco::ExperimentConfig c = sco::load_config(cfg_path);
      const sco::QuantileReport rep = sco::cmd_quantile(c, sigma, seeds_min, std::cout);
      return rep.pass ? 0 : 4;
    }
  } catch (const sco::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const sco::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
