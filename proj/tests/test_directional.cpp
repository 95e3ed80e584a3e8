#include "rodt/directional.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rodt;

TEST_CASE("expected forced-children counts") {
  CHECK(expected_zero_children(2, 3) == Rational(2, 3));
  CHECK(expected_zero_children(1, 4) == Rational(3, 2));
  CHECK(expected_one_children(3, 4) == Rational(4, 3));
  CHECK(expected_one_children(1, 4) == 0);   // k-1 = 0 ones to see
  CHECK(expected_zero_children(4, 4) == 0);  // n-k = 0 zeros to see
}

TEST_CASE("delta matrix entries") {
  CostMatrix d = delta_matrix(2, 3);
  CHECK(d.m11 == 2);
  CHECK(d.m12 == Rational(2, 3));
  CHECK(d.m21 == Rational(2, 3));
  CHECK(d.m22 == 2);

  // AND gate: second column scales zeros only
  CostMatrix a = delta_matrix(2, 2);
  CHECK(a.m11 == 2);
  CHECK(a.m12 == 0);
  CHECK(a.m21 == Rational(1, 2));
  CHECK(a.m22 == 1);
}

TEST_CASE("exact_cost reproduces the recurrence values") {
  DirectionalCost d1 = exact_cost(FormulaSpec::constant(2, 3, 1));
  CHECK(d1.phi == Rational(8, 3));
  CHECK(d1.psi == Rational(8, 3));

  DirectionalCost d2 = exact_cost(FormulaSpec::constant(2, 3, 2));
  CHECK(d2.phi == Rational(64, 9));
  CHECK(d2.psi == Rational(64, 9));

  DirectionalCost d0 = exact_cost(FormulaSpec::constant(2, 3, 0));
  CHECK(d0.phi == 1);
  CHECK(d0.psi == 1);

  // pure OR and pure AND, depth 1
  DirectionalCost o = exact_cost(FormulaSpec::constant(1, 3, 1));
  CHECK(o.phi == 2);
  CHECK(o.psi == 3);
  DirectionalCost a = exact_cost(FormulaSpec::constant(3, 3, 1));
  CHECK(a.phi == 3);
  CHECK(a.psi == 2);

  // alternating n=2, AND root
  DirectionalCost alt1 = exact_cost(FormulaSpec::alternating(2, GateKind::AND, 1));
  CHECK(alt1.phi == 2);
  CHECK(alt1.psi == Rational(3, 2));
  DirectionalCost alt2 = exact_cost(FormulaSpec::alternating(2, GateKind::AND, 2));
  CHECK(alt2.phi == 3);
  CHECK(alt2.psi == Rational(11, 4));
  DirectionalCost or2 = exact_cost(FormulaSpec::alternating(2, GateKind::OR, 2));
  CHECK(or2.phi == Rational(11, 4));
  CHECK(or2.psi == 3);
}

TEST_CASE("exact_cost scales like the eigenvalue on symmetric gates") {
  // (2,3) keeps phi = psi = (8/3)^d
  Rational expect = 1;
  for (int d = 0; d <= 10; ++d) {
    DirectionalCost c = exact_cost(FormulaSpec::constant(2, 3, d));
    CHECK(c.phi == expect);
    CHECK(c.psi == expect);
    expect *= Rational(8, 3);
  }
}

TEST_CASE("run_directional counts queries and is seed-stable") {
  FormulaSpec f = FormulaSpec::constant(2, 3, 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Assignment a = sample_reluctant(f, seed);
    std::uint64_t q = run_directional(f, a, seed);
    CHECK(q == run_directional(f, a, seed));
    CHECK(q >= 4);  // two subtrees forced, each needs two queries
    CHECK(q <= 9);
  }
  // depth 0: always exactly one query
  FormulaSpec leaf = FormulaSpec::constant(1, 1, 0);
  CHECK(run_directional(leaf, parse_assignment("1"), 7) == 1);
  CHECK(run_directional(leaf, parse_assignment("0"), 7) == 1);
}

TEST_CASE("run_directional on depth 1 visits children until forced") {
  FormulaSpec f = FormulaSpec::constant(2, 3, 1);
  // inputs with two ones stop after seeing both ones; with one one, after
  // two zeros; either way 2 or 3 queries
  for (const char* s : {"110", "101", "011", "100", "010", "001"}) {
    std::uint64_t q = run_directional(f, parse_assignment(s), 123);
    CHECK(q >= 2);
    CHECK(q <= 3);
  }
}

TEST_CASE("monte_carlo aggregates reproducibly and near the exact values") {
  FormulaSpec f = FormulaSpec::constant(2, 3, 2);
  SimulationReport r = monte_carlo(f, 20000, 7);
  SimulationReport r2 = monte_carlo(f, 20000, 7);
  CHECK(r.mean == r2.mean);
  CHECK(r.count1 == r2.count1);
  CHECK(r.trials == 20000);
  CHECK(r.count0 + r.count1 == r.trials);
  CHECK(r.exact_phi == Rational(64, 9));
  CHECK(r.exact_psi == Rational(64, 9));
  double exact = 64.0 / 9.0;
  CHECK(std::abs(r.mean - exact) < 0.1);
  CHECK(r.variance > 0);

  SimulationReport cond = monte_carlo(f, 5000, 9, 1);
  CHECK(cond.count1 == 5000);
  CHECK(cond.count0 == 0);
  CHECK(std::abs(cond.mean1 - exact) < 0.2);
}

TEST_CASE("monte_carlo rejects zero trials") {
  CHECK_THROWS_AS(monte_carlo(FormulaSpec::constant(2, 3, 1), 0, 1),
                  std::invalid_argument);
}
