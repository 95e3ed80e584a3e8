#pragma once

#include "rodt/cost.hpp"
#include "rodt/formula.hpp"

#include <cstdint>
#include <optional>

namespace rodt {

// Expected query counts of the directional algorithm on reluctant inputs,
// conditioned on the node value: phi when it evaluates to 1, psi when 0.
struct DirectionalCost {
  Rational phi;
  Rational psi;
  int depth;
};

// Expected children evaluated to 0 at a gate outputting 1: (n-k)k/(k+1).
Rational expected_zero_children(int k, int n);
// Expected children evaluated to 1 at a gate outputting 0:
// (k-1)(n-k+1)/(n-k+2).
Rational expected_one_children(int k, int n);

// [[k, (n-k)k/(k+1)], [(k-1)(n-k+1)/(n-k+2), n-k+1]]
CostMatrix delta_matrix(int k, int n);

// (Phi_d, Psi_d): per-level delta matrices applied root-first to (1,1).
DirectionalCost exact_cost(const FormulaSpec& f);

// One run of the directional algorithm: children in random order per gate,
// stop once the gate is forced (k ones seen -> 1, n-k+1 zeros seen -> 0).
// Returns the number of leaf queries; deterministic per seed.
std::uint64_t run_directional(const FormulaSpec& f, const Assignment& a,
                              std::uint64_t seed);

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int depth = 0;
  double mean = 0;
  double variance = 0;  // sample variance of query counts
  std::uint64_t count1 = 0, count0 = 0;
  double mean1 = 0, mean0 = 0;
  double stddev1 = 0, stddev0 = 0;
  Rational exact_phi, exact_psi;  // targets from exact_cost
};

// Samples reluctant inputs (optionally conditioned on the root value), runs
// the directional algorithm, and aggregates.
SimulationReport monte_carlo(const FormulaSpec& f, std::uint64_t trials,
                             std::uint64_t seed,
                             std::optional<int> condition = std::nullopt);

}  // namespace rodt
