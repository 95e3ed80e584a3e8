#include "rodt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  rodt::RunConfig config;
  std::string out_path;

  CLI::App app{"Exact bounds and simulations for read-once threshold trees"};
  app.require_subcommand(1);

  CLI::App* pkn = app.add_subcommand(
      "pkn", "P(k,n) table: exchange rates for the shrink step");
  pkn->add_option("--k", config.k, "ones threshold");
  pkn->add_option("--n", config.n, "slice length");
  pkn->add_option("--n-max", config.n_max, "emit all 0 <= k <= n <= n-max");
  pkn->add_option("--mode", config.mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));
  pkn->add_option("--format", config.format, "csv | json");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "lower/upper bound tables for uniform threshold trees");
  bounds->add_option("--k", config.k, "gate threshold");
  bounds->add_option("--n", config.n, "gate fan-out");
  bounds->add_option("--dmax", config.d_max, "deepest row");
  bounds->add_flag("--andor", config.andor, "alternating AND/OR tree");
  bounds->add_option("--root", config.root, "alternating root: and | or");
  bounds->add_flag("--generic-p", config.generic_p,
                   "use the closed-form alpha/beta instead of exact P");
  bounds->add_flag("--thm3-check", config.thm3_check,
                   "emit the printed-vs-matrix growth rate comparison");
  bounds->add_option("--format", config.format, "csv | json");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo runs of the directional algorithm");
  simulate->add_option("--k", config.k, "gate threshold");
  simulate->add_option("--n", config.n, "gate fan-out");
  simulate->add_option("--depth", config.depth, "tree depth");
  simulate->add_option("--trials", config.trials, "number of runs");
  simulate->add_option("--seed", config.seed, "master seed");
  simulate->add_flag("--andor", config.andor, "alternating AND/OR tree");
  simulate->add_option("--root", config.root, "alternating root: and | or");
  simulate->add_option("--condition", config.condition,
                       "condition sampling on the root value (0 or 1)");
  simulate->add_option("--format", config.format, "json | csv");

  CLI::App* verify = app.add_subcommand(
      "verify", "property suites: pkn monotonicity, bound consistency");
  verify->add_option("--n-max", config.n_max, "pkn property sweep limit");
  verify->add_flag("--with-oracle", config.with_oracle,
                   "include the exhaustive oracle equivalence suite");
  verify->add_flag("--thm3", config.thm3,
                   "check the printed Theorem 3 form (expected WARN)");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exact optimal decision-tree cost by exhaustive DP");
  oracle->add_option("--formula", config.formula,
                     "\"k,n,d\" or \"and,n,d\" or \"or,n,d\"");
  oracle->add_option("--dist", config.dist, "reluctant | slice");
  oracle->add_option("--slice-k", config.slice_k, "ones count for slice dist");
  oracle->add_option("--c0", config.c0, "cost per queried 0 (rational)");
  oracle->add_option("--c1", config.c1, "cost per queried 1 (rational)");

  for (CLI::App* sub : {pkn, bounds, simulate, verify, oracle})
    sub->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (CLI::App* sub : {pkn, bounds, simulate, verify, oracle})
    if (app.got_subcommand(sub)) config.subcommand = sub->get_name();

  try {
    rodt::apply_env_overrides(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 2;
      }
      return rodt::run_command(config, file);
    }
    return rodt::run_command(config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
