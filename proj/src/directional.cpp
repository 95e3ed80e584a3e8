#include "rodt/directional.hpp"

#include "rodt/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rodt {

namespace {

void check_gate(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("gate needs 1 <= k <= n");
}

}  // namespace

Rational expected_zero_children(int k, int n) {
  check_gate(k, n);
  return Rational(n - k) * k / (k + 1);
}

Rational expected_one_children(int k, int n) {
  check_gate(k, n);
  return Rational(k - 1) * (n - k + 1) / (n - k + 2);
}

CostMatrix delta_matrix(int k, int n) {
  check_gate(k, n);
  return CostMatrix{k, expected_zero_children(k, n),
                    expected_one_children(k, n), n - k + 1};
}

DirectionalCost exact_cost(const FormulaSpec& f) {
  CostPair cost{1, 1};
  for (int level = f.depth - 1; level >= 0; --level) {
    GateSpec g = f.gate_at_level(level);
    cost = apply(delta_matrix(g.k, g.n), cost);
  }
  return DirectionalCost{cost.c1, cost.c0, f.depth};
}

namespace {

std::size_t subtree_width(const FormulaSpec& f, int level) {
  std::size_t w = 1;
  for (int i = level; i < f.depth; ++i) w *= std::size_t(f.fanout);
  return w;
}

// Evaluates the node directionally; returns (value, queries). Only the
// children actually visited contribute queries.
std::pair<int, std::uint64_t> run_rec(const FormulaSpec& f, const Assignment& a,
                                      int level, std::uint64_t node_id,
                                      std::size_t base, std::uint64_t seed) {
  if (level == f.depth) return {a.bits[base], 1};
  GateSpec g = f.gate_at_level(level);
  std::vector<int> order(g.n);
  for (int j = 0; j < g.n; ++j) order[j] = j;
  SplitMix64 gen(derive_seed(seed, node_id));
  shuffle(gen, order);
  std::size_t child_width = subtree_width(f, level + 1);
  int ones = 0, zeros = 0;
  std::uint64_t queries = 0;
  for (int j : order) {
    auto [value, q] =
        run_rec(f, a, level + 1, node_id * std::uint64_t(g.n) + 1 + std::uint64_t(j),
                base + std::size_t(j) * child_width, seed);
    queries += q;
    if (value)
      ++ones;
    else
      ++zeros;
    if (ones >= g.k) return {1, queries};
    if (zeros >= g.n - g.k + 1) return {0, queries};
  }
  throw std::logic_error("gate not forced after all children");
}

}  // namespace

std::uint64_t run_directional(const FormulaSpec& f, const Assignment& a,
                              std::uint64_t seed) {
  if (BigInt(a.bits.size()) != f.leaf_count())
    throw std::invalid_argument("assignment length mismatch");
  return run_rec(f, a, 0, 0, 0, seed).second;
}

SimulationReport monte_carlo(const FormulaSpec& f, std::uint64_t trials,
                             std::uint64_t seed,
                             std::optional<int> condition) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  SimulationReport report;
  report.trials = trials;
  report.seed = seed;
  report.depth = f.depth;
  DirectionalCost exact = exact_cost(f);
  report.exact_phi = exact.phi;
  report.exact_psi = exact.psi;

  SplitMix64 master(seed);
  double sum = 0, sumsq = 0;
  double sum1 = 0, sumsq1 = 0, sum0 = 0, sumsq0 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t sample_seed = master.next();
    std::uint64_t run_seed = master.next();
    Assignment a = sample_reluctant(f, sample_seed, condition);
    int value = evaluate(f, a);
    double q = double(run_directional(f, a, run_seed));
    sum += q;
    sumsq += q * q;
    if (value) {
      ++report.count1;
      sum1 += q;
      sumsq1 += q * q;
    } else {
      ++report.count0;
      sum0 += q;
      sumsq0 += q * q;
    }
  }
  double n = double(trials);
  report.mean = sum / n;
  report.variance = trials > 1 ? (sumsq - sum * sum / n) / (n - 1) : 0.0;
  if (report.count1) {
    double n1 = double(report.count1);
    report.mean1 = sum1 / n1;
    report.stddev1 =
        report.count1 > 1 ? std::sqrt(std::max(0.0, (sumsq1 - sum1 * sum1 / n1) / (n1 - 1)))
                          : 0.0;
  }
  if (report.count0) {
    double n0 = double(report.count0);
    report.mean0 = sum0 / n0;
    report.stddev0 =
        report.count0 > 1 ? std::sqrt(std::max(0.0, (sumsq0 - sum0 * sum0 / n0) / (n0 - 1)))
                          : 0.0;
  }
  return report;
}

}  // namespace rodt
