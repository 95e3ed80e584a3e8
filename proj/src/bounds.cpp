#include "rodt/bounds.hpp"

#include "rodt/directional.hpp"
#include "rodt/formula.hpp"
#include "rodt/pkn.hpp"

#include <cmath>
#include <stdexcept>

namespace rodt {

namespace {

void check_gate(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("gate needs 1 <= k <= n");
}

}  // namespace

CostMatrix gamma_matrix(int k, int n, const Rational& alpha,
                        const Rational& beta) {
  check_gate(k, n);
  if (alpha < 0 || beta < 0)
    throw std::invalid_argument("alpha and beta must be nonnegative");
  return CostMatrix{k, alpha * k, beta * (n - k + 1), n - k + 1};
}

CostMatrix gamma_generic(int k, int n) {
  check_gate(k, n);
  return gamma_matrix(k, n, Rational(n - k, 2 * k),
                      Rational(k - 1, 2 * (n - k + 1)));
}

CostMatrix gamma_exact(int k, int n) {
  check_gate(k, n);
  return gamma_matrix(k, n, p(k, n).value, p(n - k + 1, n).value);
}

CostPair matrix_power_cost(const CostMatrix& m, int d) {
  if (d < 0) throw std::invalid_argument("negative power");
  CostPair cost{1, 1};
  for (int i = 0; i < d; ++i) cost = apply(m, cost);
  return cost;
}

AndOrProduct andor_product(int n) {
  if (n < 2) throw std::invalid_argument("andor_product needs n >= 2");
  CostMatrix a = gamma_matrix(n, n, 0, Rational(n - 1, 2));
  CostMatrix b = gamma_matrix(1, n, Rational(n - 1, 2), 0);
  AndOrProduct result{multiply(a, b), multiply(b, a), {}};
  result.bound = largest_eigenvalue(result.ab);
  return result;
}

std::pair<double, double> closed_form_thm1(int n) {
  if (n < 2) throw std::invalid_argument("closed_form_thm1 needs n >= 2");
  double nn = n;
  double q = (nn - 1) * (nn - 1);
  double root = std::sqrt(1 + 16 * nn / q);
  double first = nn + q / 8 + (q / 8) * root;
  double second = (nn + 1) * (nn + 1) / 4 + 2 * nn / (1 + root);
  return {first, second};
}

double closed_form_thm2(int k, int n) {
  if (!(1 < k && k < n))
    throw std::invalid_argument("closed_form_thm2 needs 1 < k < n");
  double half = (double(n) + 1) / 2;
  double ratio =
      8.0 * k * (n - k + 1) / (double(n - k + 2) * (k + 1) * (n + 1));
  return half + half * std::sqrt(1 - ratio);
}

Thm3Result closed_form_thm3(int k, int n) {
  if (!(1 < k && k < n))
    throw std::invalid_argument("closed_form_thm3 needs 1 < k < n");
  double t = double(n) + 1;
  double printed_radicand = t * t - (3.0 * k * (n - k + 1) - n);
  double printed = (t + std::sqrt(printed_radicand)) / 2;
  double derived = largest_eigenvalue(gamma_generic(k, n)).lambda;
  bool consistent =
      std::abs(printed - derived) <= 1e-9 * std::max(1.0, std::abs(derived));
  return Thm3Result{printed, derived, consistent};
}

double bounded_error_scale(double bound, double delta) {
  if (delta < 0 || delta >= 0.5)
    throw std::invalid_argument("delta must satisfy 0 <= delta < 1/2");
  return bound * (1 - 2 * delta);
}

BoundsReport report_bounds(int k, int n, int d_max) {
  if (!(1 < k && k < n))
    throw std::invalid_argument("report_bounds needs 1 < k < n");
  if (d_max < 0) throw std::invalid_argument("negative d_max");
  BoundsReport report;
  report.k = k;
  report.n = n;
  report.generic = gamma_generic(k, n);
  report.exact = gamma_exact(k, n);
  report.delta = delta_matrix(k, n);
  report.lambda_generic = largest_eigenvalue(report.generic);
  report.lambda_exact = largest_eigenvalue(report.exact);
  report.lambda_upper = largest_eigenvalue(report.delta);
  CostPair generic{1, 1}, exact{1, 1}, upper{1, 1};
  for (int d = 0; d <= d_max; ++d) {
    if (d > 0) {
      generic = apply(report.generic, generic);
      exact = apply(report.exact, exact);
      upper = apply(report.delta, upper);
    }
    BoundsRow row;
    row.d = d;
    row.lower_generic = generic;
    row.lower_exact = exact;
    row.scalar_generic = std::min(generic.c1, generic.c0);
    row.scalar_exact = std::min(exact.c1, exact.c0);
    row.phi = upper.c1;
    row.psi = upper.c0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace rodt
