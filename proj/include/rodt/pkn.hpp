#pragma once

#include "rodt/rational.hpp"

#include <string>
#include <vector>

namespace rodt {

struct SliceSpec {
  int k;  // ones
  int n;  // length
};

enum class Decision : unsigned char { Stop, Query };

// Memoized stop-allowed continuation values V_eta(k', n') over the uniform
// slice with k' ones among n' bits, cost 1 per 0 and -eta per 1:
//   V = min(0, (k/n)(-eta + V(k-1,n-1)) + ((n-k)/n)(1 + V(k,n-1)))
// with V(0,.) = V(.,0) = 0. Exchangeability of the slice makes (k', n') a
// sufficient state; ties break toward Stop so certificates are canonical.
class EtaDPTable {
 public:
  static EtaDPTable build(int n_max, const Rational& eta);

  const Rational& eta() const { return eta_; }
  int n_max() const { return n_max_; }
  const Rational& value(int k, int n) const;
  Decision decision(int k, int n) const;

 private:
  int n_max_ = 0;
  Rational eta_;
  std::vector<Rational> values_;
  std::vector<Decision> decisions_;
  std::size_t index(int k, int n) const;
};

// Exact optimal stop-allowed expected cost over the slice. eta >= 0.
Rational v_eta(int k, int n, const Rational& eta);

// Best non-empty tree: the first query is forced, then optimal continuation.
// k = 0 is degenerate but defined (the forced query reads a 0): returns 1.
Rational p_eta(int k, int n, const Rational& eta);
Rational p_eta(int k, int n, const EtaDPTable& table);

struct PValue {
  int k = 0, n = 0;
  bool infinite = false;  // P(0,n); value is meaningless when set
  Rational value;
  // Stop/Query structure at eta = P(k,n), the optimality certificate.
  EtaDPTable certificate{};
};

// Exact P(k,n) = max{eta : P_eta(k,n) >= 0} by structure-fixing iteration:
// freeze the Stop/Query decisions at the current eta, solve the linearized
// cost for its root, repeat until P_eta hits zero exactly.
PValue p(int k, int n);

// Float bisection fallback (tolerance 2^-40) with a double-valued DP.
double p_float(int k, int n);

struct PknPropertyReport {
  bool eta_monotone_in_n = true;      // (a)
  bool p_decreasing_diagonal = true;  // (b)
  bool ratio_bound = true;            // (c)
  bool half_ratio_lower_bound = true; // (d)
  bool p1n_exact = true;              // (e)
  bool stop_at_k1_n1 = true;          // (f)
  std::vector<std::string> counterexamples;

  bool all() const {
    return eta_monotone_in_n && p_decreasing_diagonal && ratio_bound &&
           half_ratio_lower_bound && p1n_exact && stop_at_k1_n1;
  }
};

PknPropertyReport verify_pkn_properties(int max_n,
                                        const std::vector<Rational>& eta_grid);

}  // namespace rodt
