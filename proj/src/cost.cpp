#include "rodt/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace rodt {

CostPair apply(const CostMatrix& m, const CostPair& c) {
  return CostPair{m.m11 * c.c1 + m.m12 * c.c0, m.m21 * c.c1 + m.m22 * c.c0};
}

CostMatrix multiply(const CostMatrix& a, const CostMatrix& b) {
  return CostMatrix{a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                    a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Rational trace(const CostMatrix& m) { return m.m11 + m.m22; }

Rational det(const CostMatrix& m) { return m.m11 * m.m22 - m.m12 * m.m21; }

SpectralBound largest_eigenvalue(const CostMatrix& m) {
  Rational t = trace(m);
  Rational d = det(m);
  Rational radicand = t * t / 4 - d;
  if (radicand < 0)
    throw std::domain_error("complex eigenvalues: T^2/4 < D");
  double lambda = to_double(t) / 2 + std::sqrt(to_double(radicand));
  return SpectralBound{t, d, lambda};
}

namespace {

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

int sign_u_plus_v_sqrt(const Rational& u, const Rational& v,
                       const Rational& R) {
  if (R < 0) throw std::domain_error("negative radicand");
  if (v == 0 || R == 0) return sign(u);
  if (v < 0) return -sign_u_plus_v_sqrt(-u, -v, R);
  if (u >= 0) return 1;
  // u < 0, v > 0: compare u^2 against v^2 R
  Rational diff = u * u - v * v * R;
  return diff < 0 ? 1 : (diff > 0 ? -1 : 0);
}

int compare_lambda(const SpectralBound& x, const SpectralBound& y) {
  // sign of (Tx - Ty)/2 + sqrt(Rx) - sqrt(Ry)
  Rational u = (x.trace - y.trace) / 2;
  Rational rx = x.radicand();
  Rational ry = y.radicand();
  int su = sign(u);
  int sr = sign(rx - ry);  // sign of sqrt(Rx) - sqrt(Ry)
  if (su == 0 && sr == 0) return 0;
  if (su >= 0 && sr >= 0) return 1;
  if (su <= 0 && sr <= 0) return -1;
  // opposite signs: decide by |u|^2 - |sqrt(Rx) - sqrt(Ry)|^2
  //   = u^2 - Rx - Ry + 2 sqrt(Rx Ry)
  int t = sign_u_plus_v_sqrt(u * u - rx - ry, 2, rx * ry);
  if (t == 0) return 0;
  return su > 0 ? t : -t;
}

bool lambda_equals(const SpectralBound& x, const Rational& q) {
  Rational half_gap = q - x.trace / 2;
  if (half_gap < 0) return false;
  return half_gap * half_gap == x.radicand();
}

}  // namespace rodt
