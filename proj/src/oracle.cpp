#include "rodt/oracle.hpp"

#include "rodt/bounds.hpp"
#include "rodt/directional.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace rodt {

std::string cylinder_str(const Cylinder& c) {
  std::string s;
  s.reserve(c.state.size());
  for (signed char t : c.state)
    s.push_back(t < 0 ? '*' : char('0' + t));
  return s;
}

Distribution Distribution::reluctant() { return Distribution{}; }

Distribution Distribution::slice_uniform(int k) {
  Distribution d;
  d.kind = Kind::SliceUniform;
  d.slice_k = k;
  return d;
}

Distribution Distribution::explicit_weights(
    std::vector<std::pair<Assignment, Rational>> weights) {
  Distribution d;
  d.kind = Kind::Explicit;
  d.weights = std::move(weights);
  return d;
}

namespace {

constexpr int kMaxVars = 12;

struct SupportItem {
  std::uint32_t mask;
  Rational weight;
};

std::vector<SupportItem> build_support(const FormulaSpec& f,
                                       const Distribution& dist,
                                       std::size_t m) {
  std::vector<SupportItem> support;
  switch (dist.kind) {
    case Distribution::Kind::Reluctant: {
      Assignment a;
      a.bits.assign(m, 0);
      for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        for (std::size_t i = 0; i < m; ++i) a.bits[i] = (mask >> i) & 1;
        if (is_reluctant(f, a)) support.push_back({mask, 1});
      }
      break;
    }
    case Distribution::Kind::SliceUniform: {
      if (dist.slice_k < 0 || std::size_t(dist.slice_k) > m)
        throw std::invalid_argument("slice_k out of range");
      for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask)
        if (std::popcount(mask) == dist.slice_k) support.push_back({mask, 1});
      break;
    }
    case Distribution::Kind::Explicit: {
      for (const auto& [a, w] : dist.weights) {
        if (a.bits.size() != m)
          throw std::invalid_argument("explicit weight length mismatch");
        if (w < 0) throw std::invalid_argument("negative weight");
        if (w == 0) continue;
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < m; ++i)
          if (a.bits[i]) mask |= std::uint32_t(1) << i;
        support.push_back({mask, w});
      }
      break;
    }
  }
  if (support.empty())
    throw std::invalid_argument("distribution has empty support");
  return support;
}

struct ZeroErrorSolver {
  const FormulaSpec& f;
  std::size_t m;
  CostModel cost;
  std::array<std::uint32_t, kMaxVars + 1> pow3;
  std::unordered_map<std::uint32_t, Rational> memo;
  std::unordered_map<std::uint32_t, int> choice;
  Assignment lo, hi;  // scratch: cylinder with unqueried -> 0 / -> 1
  std::array<signed char, kMaxVars> cyl;

  ZeroErrorSolver(const FormulaSpec& formula, std::size_t vars, CostModel c)
      : f(formula), m(vars), cost(std::move(c)) {
    pow3[0] = 1;
    for (std::size_t i = 1; i <= kMaxVars; ++i) pow3[i] = pow3[i - 1] * 3;
    lo.bits.assign(m, 0);
    hi.bits.assign(m, 0);
    cyl.fill(-1);
  }

  bool f_constant() {
    for (std::size_t i = 0; i < m; ++i) {
      lo.bits[i] = cyl[i] < 0 ? 0 : std::uint8_t(cyl[i]);
      hi.bits[i] = cyl[i] < 0 ? 1 : std::uint8_t(cyl[i]);
    }
    return evaluate(f, lo) == evaluate(f, hi);
  }

  // key: sum of trit * 3^i with trit 2 = unqueried
  Rational solve(std::vector<SupportItem> support, std::uint32_t key) {
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational result = 0;
    if (!support.empty() && !f_constant()) {
      bool have_best = false;
      Rational best;
      int best_var = -1;
      for (std::size_t v = 0; v < m; ++v) {
        if (cyl[v] >= 0) continue;
        std::vector<SupportItem> b0, b1;
        Rational mass0 = 0, mass1 = 0;
        for (const auto& item : support) {
          if ((item.mask >> v) & 1) {
            mass1 += item.weight;
            b1.push_back(item);
          } else {
            mass0 += item.weight;
            b0.push_back(item);
          }
        }
        cyl[v] = 0;
        Rational sub0 = solve(std::move(b0), key - 2 * pow3[v]);
        cyl[v] = 1;
        Rational sub1 = solve(std::move(b1), key - pow3[v]);
        cyl[v] = -1;
        Rational total = cost.c0 * mass0 + cost.c1 * mass1 + sub0 + sub1;
        if (!have_best || total < best) {
          have_best = true;
          best = total;
          best_var = int(v);
        }
      }
      result = best;
      choice.emplace(key, best_var);
    }
    memo.emplace(key, result);
    return result;
  }

  std::uint32_t root_key() const {
    std::uint32_t key = 0;
    for (std::size_t i = 0; i < m; ++i) key += 2 * pow3[i];
    return key;
  }

  std::string cylinder_of_key(std::uint32_t key) const {
    std::string s(m, '*');
    for (std::size_t i = 0; i < m; ++i) {
      std::uint32_t trit = key / pow3[i] % 3;
      if (trit < 2) s[i] = char('0' + trit);
    }
    return s;
  }
};

}  // namespace

OracleResult optimal_expected_cost(const FormulaSpec& f,
                                   const Distribution& dist,
                                   const CostModel& cost) {
  BigInt leaves = f.leaf_count();
  if (leaves > kMaxVars)
    throw std::length_error("instance has " + leaves.str() +
                            " variables; the cylinder DP supports at most " +
                            std::to_string(kMaxVars) + " (3^" + leaves.str() +
                            " states)");
  std::size_t m = leaves.convert_to<std::size_t>();
  std::vector<SupportItem> support = build_support(f, dist, m);
  Rational total = 0;
  for (const auto& item : support) total += item.weight;

  ZeroErrorSolver solver(f, m, cost);
  Rational raw = solver.solve(support, solver.root_key());

  OracleResult result;
  result.value = raw / total;
  result.states_explored = solver.memo.size();
  for (const auto& [key, var] : solver.choice)
    result.first_query.emplace(solver.cylinder_of_key(key), var);
  if (auto it = result.first_query.find(std::string(m, '*'));
      it != result.first_query.end())
    result.root_query = it->second;
  return result;
}

Rational replay_certificate(const OracleResult& result, const FormulaSpec& f,
                            const Distribution& dist, const CostModel& cost) {
  std::size_t m = f.leaf_count_checked(kMaxVars);
  std::vector<SupportItem> support = build_support(f, dist, m);
  Rational total = 0;
  for (const auto& item : support) total += item.weight;

  // walk the stored strategy over the support
  struct Walker {
    const OracleResult& res;
    const CostModel& cost;
    Rational run(std::string cyl, std::vector<SupportItem> support) {
      auto it = res.first_query.find(cyl);
      if (it == res.first_query.end() || support.empty()) return 0;
      std::size_t v = std::size_t(it->second);
      std::vector<SupportItem> b0, b1;
      Rational mass0 = 0, mass1 = 0;
      for (const auto& item : support) {
        if ((item.mask >> v) & 1) {
          mass1 += item.weight;
          b1.push_back(item);
        } else {
          mass0 += item.weight;
          b0.push_back(item);
        }
      }
      std::string cyl0 = cyl, cyl1 = cyl;
      cyl0[v] = '0';
      cyl1[v] = '1';
      return cost.c0 * mass0 + cost.c1 * mass1 + run(cyl0, std::move(b0)) +
             run(cyl1, std::move(b1));
    }
  };
  Walker walker{result, cost};
  return walker.run(std::string(m, '*'), support) / total;
}

namespace {

// Stop-allowed DP over a slice; memo on the packed cylinder key.
struct SliceSolver {
  int n;
  Rational eta;
  std::array<std::uint32_t, kMaxVars + 1> pow3;
  std::unordered_map<std::uint32_t, Rational> memo;
  std::array<signed char, kMaxVars> cyl;

  SliceSolver(int vars, Rational e) : n(vars), eta(std::move(e)) {
    pow3[0] = 1;
    for (std::size_t i = 1; i <= kMaxVars; ++i) pow3[i] = pow3[i - 1] * 3;
    cyl.fill(-1);
  }

  // mass-weighted optimal continuation; stopping always allowed
  Rational continuation(std::vector<SupportItem> support, std::uint32_t key) {
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational best = 0;  // stop
    if (!support.empty()) {
      for (int v = 0; v < n; ++v) {
        if (cyl[v] >= 0) continue;
        Rational value = query_value(support, key, v);
        if (value < best) best = value;
      }
    }
    memo.emplace(key, best);
    return best;
  }

  Rational query_value(const std::vector<SupportItem>& support,
                       std::uint32_t key, int v) {
    std::vector<SupportItem> b0, b1;
    Rational mass0 = 0, mass1 = 0;
    for (const auto& item : support) {
      if ((item.mask >> v) & 1) {
        mass1 += item.weight;
        b1.push_back(item);
      } else {
        mass0 += item.weight;
        b0.push_back(item);
      }
    }
    cyl[v] = 0;
    Rational sub0 = continuation(std::move(b0), key - 2 * pow3[std::size_t(v)]);
    cyl[v] = 1;
    Rational sub1 = continuation(std::move(b1), key - pow3[std::size_t(v)]);
    cyl[v] = -1;
    return mass0 - eta * mass1 + sub0 + sub1;
  }
};

}  // namespace

Rational optimal_tree_over_slice(int k, int n, const Rational& eta) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("slice needs 0 <= k <= n, n >= 1");
  if (n > 5)
    throw std::length_error("optimal_tree_over_slice supports n <= 5, got n=" +
                            std::to_string(n));
  if (eta < 0) throw std::domain_error("eta must be >= 0");
  std::vector<SupportItem> support;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask)
    if (std::popcount(mask) == k) support.push_back({mask, 1});
  Rational total = binomial(n, k).convert_to<Rational>();

  SliceSolver solver(n, eta);
  std::uint32_t root = 0;
  for (int i = 0; i < n; ++i) root += 2 * solver.pow3[std::size_t(i)];
  bool have_best = false;
  Rational best;
  for (int v = 0; v < n; ++v) {  // first query forced
    Rational value = solver.query_value(support, root, v);
    if (!have_best || value < best) {
      have_best = true;
      best = value;
    }
  }
  return best / total;
}

namespace {

std::size_t subtree_width(const FormulaSpec& f, int level) {
  std::size_t w = 1;
  for (int i = level; i < f.depth; ++i) w *= std::size_t(f.fanout);
  return w;
}

int eval_sub(const FormulaSpec& f, const Assignment& a, int level,
             std::size_t base) {
  if (level == f.depth) return a.bits[base];
  GateSpec g = f.gate_at_level(level);
  std::size_t child_width = subtree_width(f, level + 1);
  int ones = 0;
  for (int j = 0; j < g.n; ++j)
    ones += eval_sub(f, a, level + 1, base + std::size_t(j) * child_width);
  return ones >= g.k ? 1 : 0;
}

// Expected directional query count at a node, averaged over every child
// order below it, for the fixed input a.
Rational order_avg_cost(const FormulaSpec& f, const Assignment& a, int level,
                        std::size_t base) {
  if (level == f.depth) return 1;
  GateSpec g = f.gate_at_level(level);
  std::size_t child_width = subtree_width(f, level + 1);
  std::vector<Rational> child_cost(std::size_t(g.n));
  std::vector<int> child_value(std::size_t(g.n));
  for (int j = 0; j < g.n; ++j) {
    child_cost[std::size_t(j)] =
        order_avg_cost(f, a, level + 1, base + std::size_t(j) * child_width);
    child_value[std::size_t(j)] =
        eval_sub(f, a, level + 1, base + std::size_t(j) * child_width);
  }
  std::vector<int> order(std::size_t(g.n));
  for (int j = 0; j < g.n; ++j) order[std::size_t(j)] = j;
  Rational sum = 0;
  std::uint64_t perms = 0;
  do {
    int ones = 0, zeros = 0;
    Rational cost = 0;
    for (int j : order) {
      cost += child_cost[std::size_t(j)];
      if (child_value[std::size_t(j)])
        ++ones;
      else
        ++zeros;
      if (ones >= g.k || zeros >= g.n - g.k + 1) break;
    }
    sum += cost;
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum / perms;
}

}  // namespace

std::pair<Rational, Rational> directional_exact_small(const FormulaSpec& f) {
  if (f.depth > 2 || f.gate_fanout() > 3)
    throw std::length_error(
        "directional_exact_small supports d <= 2 and n <= 3");
  std::vector<Assignment> inputs = enumerate_reluctant(f);
  Rational sum1 = 0, sum0 = 0;
  BigInt count1 = 0, count0 = 0;
  for (const Assignment& a : inputs) {
    Rational cost = order_avg_cost(f, a, 0, 0);
    if (evaluate(f, a)) {
      sum1 += cost;
      ++count1;
    } else {
      sum0 += cost;
      ++count0;
    }
  }
  return {sum1 / count1.convert_to<Rational>(),
          sum0 / count0.convert_to<Rational>()};
}

ShrinkReport check_shrink_inequality(int k, int n, const CostModel& cost) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("shrink check needs 1 <= k <= n");
  if (n > 5)
    throw std::length_error("check_shrink_inequality supports n <= 5");
  ShrinkReport report;
  report.k = k;
  report.n = n;
  report.cost = cost;
  FormulaSpec f1 = FormulaSpec::constant(k, n, 1);
  report.lhs =
      optimal_expected_cost(f1, Distribution::reluctant(), cost).value;
  report.transformed =
      apply(gamma_exact(k, n), CostPair{cost.c1, cost.c0});
  report.rhs_avg = (report.transformed.c1 + report.transformed.c0) / 2;
  report.rhs_min = std::min(report.transformed.c1, report.transformed.c0);
  report.avg_holds = report.lhs >= report.rhs_avg;
  report.min_holds = report.lhs >= report.rhs_min;
  report.passed = report.min_holds;
  return report;
}

}  // namespace rodt
