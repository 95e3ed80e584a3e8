#pragma once

#include "rodt/formula.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rodt {

// Resolved invocation; every subcommand reads the fields it needs.
struct RunConfig {
  std::string subcommand;
  int k = -1;
  int n = -1;
  int n_max = -1;
  int depth = 1;
  int d_max = 3;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  bool andor = false;
  std::string root = "and";       // alternating root kind
  bool generic_p = false;         // bounds: use the generic alpha/beta
  std::string mode = "exact";     // exact | float
  std::string format;             // json | csv (default depends on command)
  bool with_oracle = false;       // verify
  bool thm3 = false;              // verify
  bool thm3_check = false;        // bounds
  int condition = -1;             // simulate: root-value conditioning, -1 off
  std::string formula;            // oracle: "k,n,d" or "and,n,d" / "or,n,d"
  std::string dist = "reluctant"; // oracle: reluctant | slice
  int slice_k = -1;               // oracle: slice ones count
  std::string c0 = "1";           // oracle: cost per queried 0
  std::string c1 = "1";           // oracle: cost per queried 1
};

// RDT_SEED overrides the seed when set; invalid values raise
// std::invalid_argument.
void apply_env_overrides(RunConfig& config);

FormulaSpec parse_formula_arg(const std::string& text);

// Exit codes: 0 success, 1 property/check failure, 2 usage error.
int cmd_pkn(const RunConfig& config, std::ostream& out);
int cmd_bounds(const RunConfig& config, std::ostream& out);
int cmd_simulate(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_oracle(const RunConfig& config, std::ostream& out);

int run_command(const RunConfig& config, std::ostream& out);

}  // namespace rodt
