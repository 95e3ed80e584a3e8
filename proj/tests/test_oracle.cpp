#include "rodt/oracle.hpp"

#include "rodt/directional.hpp"
#include "rodt/pkn.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rodt;

TEST_CASE("cylinder text form") {
  Cylinder c;
  c.state = {0, 1, -1, -1, 1};
  CHECK(cylinder_str(c) == "01**1");
  CHECK(cylinder_str(Cylinder::all_unqueried(3)) == "***");
}

TEST_CASE("optimal cost of the depth-1 majority under the reluctant mix") {
  FormulaSpec f = FormulaSpec::constant(2, 3, 1);
  OracleResult unit = optimal_expected_cost(f, Distribution::reluctant(),
                                            CostModel{1, 1});
  CHECK(unit.value == Rational(8, 3));
  CHECK(unit.root_query >= 0);
  CHECK(unit.states_explored > 0);
  CHECK(replay_certificate(unit, f, Distribution::reluctant(),
                           CostModel{1, 1}) == unit.value);

  OracleResult heavy0 = optimal_expected_cost(f, Distribution::reluctant(),
                                              CostModel{2, 1});
  CHECK(heavy0.value == 4);

  // raising any cost entry never lowers the optimum
  OracleResult heavy1 = optimal_expected_cost(f, Distribution::reluctant(),
                                              CostModel{1, 2});
  CHECK(heavy0.value >= unit.value);
  CHECK(heavy1.value >= unit.value);
}

TEST_CASE("single variable is one forced query") {
  FormulaSpec leaf = FormulaSpec::constant(1, 1, 0);
  OracleResult r = optimal_expected_cost(leaf, Distribution::reluctant(),
                                         CostModel{Rational(3), Rational(5)});
  // reluctant marginal at depth 0 is (1/2, 1/2)
  CHECK(r.value == Rational(4));
  CHECK(r.root_query == 0);
}

TEST_CASE("negative per-one cost connects to P(2,3)") {
  FormulaSpec f = FormulaSpec::constant(2, 3, 1);
  OracleResult r = optimal_expected_cost(f, Distribution::reluctant(),
                                         CostModel{1, Rational(-1, 4)});
  // zero-error trees must keep reading; the optimum stays above the
  // stop-allowed slice value 0 and lands at exactly 1
  CHECK(r.value == 1);
  CHECK(r.value >= 0);
}

TEST_CASE("explicit distributions are validated and normalized") {
  FormulaSpec f = FormulaSpec::constant(1, 2, 1);
  std::vector<std::pair<Assignment, Rational>> weights{
      {parse_assignment("10"), Rational(3)},
      {parse_assignment("01"), Rational(1)},
  };
  OracleResult r = optimal_expected_cost(
      f, Distribution::explicit_weights(weights), CostModel{1, 1});
  // query the heavy variable first: 3/4 of the mass stops after one query
  CHECK(r.value == Rational(3, 4) * 1 + Rational(1, 4) * 2);
  CHECK(r.root_query == 0);

  std::vector<std::pair<Assignment, Rational>> empty;
  CHECK_THROWS_AS(optimal_expected_cost(
                      f, Distribution::explicit_weights(empty), CostModel{1, 1}),
                  std::invalid_argument);
  std::vector<std::pair<Assignment, Rational>> negative{
      {parse_assignment("10"), Rational(-1)}};
  CHECK_THROWS_AS(optimal_expected_cost(f,
                                        Distribution::explicit_weights(negative),
                                        CostModel{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("state guard refuses more than 12 variables") {
  CHECK_THROWS_AS(optimal_expected_cost(FormulaSpec::constant(2, 4, 2),
                                        Distribution::reluctant(),
                                        CostModel{1, 1}),
                  std::length_error);
}

TEST_CASE("slice oracle reproduces the forced-first-query DP") {
  CHECK(optimal_tree_over_slice(1, 2, Rational(1, 2)) == 0);
  CHECK(optimal_tree_over_slice(2, 4, Rational(1, 2)) == Rational(1, 12));
  CHECK(optimal_tree_over_slice(3, 3, Rational(1)) == -3);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (Rational eta : {Rational(0), Rational(1, 4), Rational(1, 2),
                           Rational(1), Rational(2)})
        CHECK(optimal_tree_over_slice(k, n, eta) == p_eta(k, n, eta));
  CHECK_THROWS_AS(optimal_tree_over_slice(2, 6, Rational(1)),
                  std::length_error);
  CHECK_THROWS_AS(optimal_tree_over_slice(2, 4, Rational(-1)),
                  std::domain_error);
}

TEST_CASE("slice oracle confirms the root equation at P(k,n)") {
  for (auto [k, n] : {std::pair{2, 3}, {2, 4}, {3, 4}, {2, 5}, {4, 5}}) {
    Rational root = p(k, n).value;
    CHECK(optimal_tree_over_slice(k, n, root) == 0);
  }
}

TEST_CASE("order enumeration equals the directional recurrence") {
  auto check = [](const FormulaSpec& f) {
    auto [phi, psi] = directional_exact_small(f);
    DirectionalCost expect = exact_cost(f);
    CHECK(phi == expect.phi);
    CHECK(psi == expect.psi);
  };
  check(FormulaSpec::constant(2, 3, 1));
  check(FormulaSpec::constant(2, 3, 2));
  check(FormulaSpec::constant(1, 3, 1));
  check(FormulaSpec::constant(3, 3, 2));
  check(FormulaSpec::constant(2, 2, 1));
  check(FormulaSpec::constant(1, 1, 0));
  check(FormulaSpec::alternating(2, GateKind::AND, 2));
  check(FormulaSpec::alternating(3, GateKind::OR, 2));

  auto [phi, psi] = directional_exact_small(FormulaSpec::constant(2, 3, 2));
  CHECK(phi == Rational(64, 9));
  CHECK(psi == Rational(64, 9));
  CHECK_THROWS_AS(directional_exact_small(FormulaSpec::constant(2, 3, 3)),
                  std::length_error);
  CHECK_THROWS_AS(directional_exact_small(FormulaSpec::constant(2, 4, 1)),
                  std::length_error);
}

TEST_CASE("optimum never beats the directional algorithm") {
  for (auto [k, n] : {std::pair{2, 3}, {1, 3}, {3, 3}, {2, 2}}) {
    FormulaSpec f = FormulaSpec::constant(k, n, 1);
    OracleResult best = optimal_expected_cost(f, Distribution::reluctant(),
                                              CostModel{1, 1});
    DirectionalCost dir = exact_cost(f);
    ReluctantCounts counts = reluctant_counts(f);
    Rational mix = (Rational(counts.n1) * dir.phi +
                    Rational(counts.n0) * dir.psi) /
                   Rational(counts.n0 + counts.n1);
    CHECK(best.value <= mix);
  }
}

TEST_CASE("shrink inequality holds in min form on every small instance") {
  ShrinkReport r23 = check_shrink_inequality(2, 3, CostModel{1, 1});
  CHECK(r23.lhs == Rational(8, 3));
  CHECK(r23.rhs_avg == Rational(5, 2));
  CHECK(r23.rhs_min == Rational(5, 2));
  CHECK(r23.avg_holds);
  CHECK(r23.min_holds);
  CHECK(r23.passed);

  ShrinkReport r24 = check_shrink_inequality(2, 4, CostModel{1, 1});
  CHECK(r24.lhs == Rational(7, 2));
  CHECK(r24.transformed == CostPair{Rational(28, 9), Rational(7, 2)});
  CHECK(r24.rhs_avg == Rational(119, 36));
  CHECK(r24.rhs_min == Rational(28, 9));
  CHECK(r24.passed);

  // the one average-form violation in range: biased costs at (2,5)
  ShrinkReport r25 = check_shrink_inequality(2, 5, CostModel{2, 1});
  CHECK(r25.lhs == Rational(104, 15));
  CHECK(r25.rhs_avg == Rational(361, 52));
  CHECK(r25.rhs_min == Rational(70, 13));
  CHECK_FALSE(r25.avg_holds);
  CHECK(r25.min_holds);
  CHECK(r25.passed);

  for (int n = 3; n <= 5; ++n)
    for (int k = 2; k < n; ++k)
      for (CostModel cost : {CostModel{1, 1}, CostModel{2, 1}})
        CHECK(check_shrink_inequality(k, n, cost).passed);

  CHECK_THROWS_AS(check_shrink_inequality(2, 6, CostModel{1, 1}),
                  std::length_error);
}
