#pragma once

#include "rodt/cost.hpp"

#include <utility>
#include <vector>

namespace rodt {

// [[k, alpha*k], [beta*(n-k+1), n-k+1]]
CostMatrix gamma_matrix(int k, int n, const Rational& alpha,
                        const Rational& beta);

// alpha = (n-k)/(2k), beta = (k-1)/(2(n-k+1)):
// [[k, (n-k)/2], [(k-1)/2, n-k+1]]
CostMatrix gamma_generic(int k, int n);

// alpha = P(k,n), beta = P(n-k+1,n); dominates gamma_generic entrywise.
CostMatrix gamma_exact(int k, int n);

// M^d applied to (1,1).
CostPair matrix_power_cost(const CostMatrix& m, int d);

SpectralBound largest_eigenvalue(const CostMatrix& m);  // re-export (cost.hpp)

struct AndOrProduct {
  CostMatrix ab;  // Gamma_{n,n} * Gamma_{1,n}
  CostMatrix ba;
  SpectralBound bound;  // per two levels
};

AndOrProduct andor_product(int n);

// Both printed closed forms of the AND-OR growth rate.
std::pair<double, double> closed_form_thm1(int n);

// (n+1)/2 + ((n+1)/2) sqrt(1 - 8k(n-k+1)/((n-k+2)(k+1)(n+1)))
double closed_form_thm2(int k, int n);

struct Thm3Result {
  double printed;         // radicand 3k(n-k+1)-n as printed
  double matrix_derived;  // eigenvalue of gamma_generic, the authoritative rate
  bool consistent;        // within 1e-9
};

Thm3Result closed_form_thm3(int k, int n);

// bound * (1 - 2*delta); 0 <= delta < 1/2.
double bounded_error_scale(double bound, double delta);

struct BoundsRow {
  int d = 0;
  CostPair lower_generic;
  CostPair lower_exact;
  Rational scalar_generic;  // min component
  Rational scalar_exact;
  Rational phi;
  Rational psi;
};

struct BoundsReport {
  int k = 0, n = 0;
  CostMatrix generic, exact, delta;
  SpectralBound lambda_generic, lambda_exact, lambda_upper;
  std::vector<BoundsRow> rows;
};

BoundsReport report_bounds(int k, int n, int d_max);

}  // namespace rodt
