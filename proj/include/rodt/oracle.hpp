#pragma once

#include "rodt/cost.hpp"
#include "rodt/formula.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rodt {

// Partial assignment: per-variable state 0, 1, or -1 (unqueried).
struct Cylinder {
  std::vector<signed char> state;

  static Cylinder all_unqueried(std::size_t n) {
    return Cylinder{std::vector<signed char>(n, -1)};
  }
};

std::string cylinder_str(const Cylinder& c);  // e.g. "01**1"

// Uniform local cost: c0 per queried 0, c1 per queried 1.
struct CostModel {
  Rational c0;
  Rational c1;
};

struct Distribution {
  enum class Kind { Reluctant, SliceUniform, Explicit };
  Kind kind = Kind::Reluctant;
  int slice_k = -1;  // SliceUniform
  std::vector<std::pair<Assignment, Rational>> weights;  // Explicit

  static Distribution reluctant();
  static Distribution slice_uniform(int k);
  static Distribution explicit_weights(
      std::vector<std::pair<Assignment, Rational>> weights);
};

struct OracleResult {
  Rational value;
  // optimal first query per non-terminal cylinder (canonical: lowest index
  // among minimizers)
  std::map<std::string, int> first_query;
  std::uint64_t states_explored = 0;
  int root_query = -1;
};

// Exact minimum expected generalized cost over all zero-error deterministic
// decision trees computing f, under dist. Terminal states are "f constant on
// the cylinder" or "cylinder mass zero". Guard: n^d <= 12.
OracleResult optimal_expected_cost(const FormulaSpec& f,
                                   const Distribution& dist,
                                   const CostModel& cost);

// Replays the stored strategy; must reproduce result.value.
Rational replay_certificate(const OracleResult& result, const FormulaSpec& f,
                            const Distribution& dist, const CostModel& cost);

// Exact optimum over all adaptive decision trees (no symmetry assumption) on
// the k-ones slice under cost (1, -eta), first query forced. Guard: n <= 5.
Rational optimal_tree_over_slice(int k, int n, const Rational& eta);

// Exact (Phi_d, Psi_d) by averaging over every child order at every gate and
// all reluctant inputs, conditioned on the root value. Guard: d <= 2, n <= 3.
std::pair<Rational, Rational> directional_exact_small(const FormulaSpec& f);

struct ShrinkReport {
  int k = 0, n = 0;
  CostModel cost;
  Rational lhs;             // optimal cost of F^1 under the reluctant dist
  CostPair transformed;     // gamma_exact(k,n) applied to (c1, c0)
  Rational rhs_avg;         // (c1' + c0') / 2, the depth-0 average form
  Rational rhs_min;         // min(c1', c0'), the conservative form
  bool avg_holds = false;   // lhs >= rhs_avg
  bool min_holds = false;   // lhs >= rhs_min
  bool passed = false;      // == min_holds; avg form is surfaced, not gating
};

// Single-step cost inequality at depth 1: compares the oracle optimum of
// F^1_{k,n} against the transformed single-query cost at depth 0. Both the
// average and the min forms are reported. Guard: n <= 5.
ShrinkReport check_shrink_inequality(int k, int n, const CostModel& cost);

}  // namespace rodt
