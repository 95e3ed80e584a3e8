#pragma once

#include "rodt/rational.hpp"

namespace rodt {

// Generalized local cost: c1 per queried 1, c0 per queried 0.
struct CostPair {
  Rational c1;
  Rational c0;

  bool operator==(const CostPair&) const = default;
};

// 2x2 rational matrix [[m11, m12], [m21, m22]] acting on (c1, c0) columns.
struct CostMatrix {
  Rational m11, m12, m21, m22;

  bool operator==(const CostMatrix&) const = default;
};

CostPair apply(const CostMatrix& m, const CostPair& c);
CostMatrix multiply(const CostMatrix& a, const CostMatrix& b);
Rational trace(const CostMatrix& m);
Rational det(const CostMatrix& m);

// Largest eigenvalue lambda = T/2 + sqrt(T^2/4 - D), with the exact (T, D)
// pair retained so lambdas can be compared without float error.
struct SpectralBound {
  Rational trace;
  Rational det;
  double lambda;

  // radicand T^2/4 - D, exact
  Rational radicand() const { return trace * trace / 4 - det; }
};

// Throws std::domain_error when T^2/4 < D (complex eigenvalues).
SpectralBound largest_eigenvalue(const CostMatrix& m);

// Exact sign of u + v*sqrt(R) for rational u, v and R >= 0.
int sign_u_plus_v_sqrt(const Rational& u, const Rational& v, const Rational& R);

// Exact three-way comparison of two lambdas given as (T, D) pairs.
int compare_lambda(const SpectralBound& x, const SpectralBound& y);

// Exact test lambda == q for rational q.
bool lambda_equals(const SpectralBound& x, const Rational& q);

}  // namespace rodt
