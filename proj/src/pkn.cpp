#include "rodt/pkn.hpp"

#include <cmath>
#include <stdexcept>

namespace rodt {

std::size_t EtaDPTable::index(int k, int n) const {
  if (k < 0 || n < 0 || k > n || n > n_max_)
    throw std::invalid_argument("EtaDPTable state out of range");
  return std::size_t(n) * (n + 1) / 2 + std::size_t(k);
}

const Rational& EtaDPTable::value(int k, int n) const {
  return values_[index(k, n)];
}

Decision EtaDPTable::decision(int k, int n) const {
  return decisions_[index(k, n)];
}

EtaDPTable EtaDPTable::build(int n_max, const Rational& eta) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (eta < 0) throw std::domain_error("eta must be >= 0");
  EtaDPTable t;
  t.n_max_ = n_max;
  t.eta_ = eta;
  std::size_t cells = std::size_t(n_max + 1) * (n_max + 2) / 2;
  t.values_.assign(cells, Rational(0));
  t.decisions_.assign(cells, Decision::Stop);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      // the k == n case has coefficient (n-k)/n = 0; skip the lookup
      Rational tail = k < n ? 1 + t.value(k, n - 1) : Rational(0);
      Rational query = Rational(k, n) * (-eta + t.value(k - 1, n - 1)) +
                       Rational(n - k, n) * tail;
      std::size_t at = t.index(k, n);
      if (query < 0) {
        t.values_[at] = query;
        t.decisions_[at] = Decision::Query;
      }  // else keep Stop / 0
    }
  }
  return t;
}

Rational v_eta(int k, int n, const Rational& eta) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
  return EtaDPTable::build(n, eta).value(k, n);
}

Rational p_eta(int k, int n, const EtaDPTable& table) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("p_eta needs 0 <= k <= n, n >= 1");
  if (k == 0) return 1;  // forced query reads a 0, then stop
  Rational tail = k < n ? 1 + table.value(k, n - 1) : Rational(0);
  return Rational(k, n) * (-table.eta() + table.value(k - 1, n - 1)) +
         Rational(n - k, n) * tail;
}

Rational p_eta(int k, int n, const Rational& eta) {
  return p_eta(k, n, EtaDPTable::build(n, eta));
}

namespace {

// Affine form (a, b) of the frozen-structure cost at (k, n): cost(eta') =
// a + b*eta' when the Stop/Query decisions of `table` are kept verbatim.
struct AffineDP {
  const EtaDPTable& table;
  std::vector<std::pair<Rational, Rational>> memo;
  std::vector<bool> known;

  explicit AffineDP(const EtaDPTable& t)
      : table(t),
        memo(std::size_t(t.n_max() + 1) * (t.n_max() + 2) / 2),
        known(memo.size(), false) {}

  std::size_t index(int k, int n) const {
    return std::size_t(n) * (n + 1) / 2 + std::size_t(k);
  }

  std::pair<Rational, Rational> value(int k, int n) {
    if (k == 0 || n == 0) return {0, 0};
    std::size_t at = index(k, n);
    if (known[at]) return memo[at];
    std::pair<Rational, Rational> result{0, 0};
    if (table.decision(k, n) == Decision::Query) result = query_form(k, n);
    memo[at] = result;
    known[at] = true;
    return result;
  }

  std::pair<Rational, Rational> query_form(int k, int n) {
    auto [a1, b1] = value(k - 1, n - 1);
    auto [a0, b0] = k < n ? value(k, n - 1) : std::pair<Rational, Rational>{0, 0};
    Rational one = k < n ? 1 : 0;
    return {Rational(k, n) * a1 + Rational(n - k, n) * (one + a0),
            Rational(k, n) * (b1 - 1) + Rational(n - k, n) * b0};
  }
};

}  // namespace

PValue p(int k, int n) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("p needs 0 <= k <= n, n >= 1");
  if (k == 0) {
    PValue result;
    result.k = k;
    result.n = n;
    result.infinite = true;
    return result;
  }
  Rational eta = 0;
  for (int iter = 0; iter < 100000; ++iter) {
    EtaDPTable table = EtaDPTable::build(n, eta);
    Rational g = p_eta(k, n, table);
    if (g == 0) {
      PValue result;
      result.k = k;
      result.n = n;
      result.value = eta;
      result.certificate = std::move(table);
      return result;
    }
    AffineDP affine(table);
    // the first query is forced, so use the query form at the top even if
    // the table would stop there
    auto [a, b] = affine.query_form(k, n);
    if (a + b * eta != g)
      throw std::logic_error("linearization does not reproduce P_eta");
    if (b >= 0) throw std::logic_error("P_eta slope must be negative");
    eta = -a / b;
  }
  throw std::logic_error("P(k,n) iteration did not converge");
}

double p_float(int k, int n) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("p_float needs 1 <= k <= n");
  // double-valued DP for P_eta
  auto p_eta_f = [k, n](double eta) {
    std::vector<std::vector<double>> v(std::size_t(n + 1));
    for (int m = 0; m <= n; ++m) v[m].assign(std::size_t(m) + 1, 0.0);
    for (int m = 1; m <= n; ++m)
      for (int kk = 1; kk <= m; ++kk) {
        double query = double(kk) / m * (-eta + v[m - 1][kk - 1]) +
                       double(m - kk) / m * (1 + v[m - 1][std::size_t(std::min(kk, m - 1))]);
        v[m][kk] = std::min(0.0, query);
      }
    double top1 = (k >= 1) ? v[n - 1][k - 1] : 0.0;
    double top0 = (k <= n - 1) ? v[n - 1][k] : 0.0;
    return double(k) / n * (-eta + top1) + double(n - k) / n * (1 + top0);
  };
  double lo = 0.0, hi = double(n - 1) / 2 + 1.0;
  if (p_eta_f(lo) <= 0) return 0.0;
  while (p_eta_f(hi) > 0) hi *= 2;
  const double tol = std::ldexp(1.0, -40);
  while (hi - lo > tol) {
    double mid = (lo + hi) / 2;
    (p_eta_f(mid) >= 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

namespace {

std::string state_str(int k, int n) {
  return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

}  // namespace

PknPropertyReport verify_pkn_properties(int max_n,
                                        const std::vector<Rational>& eta_grid) {
  if (max_n < 2) throw std::invalid_argument("max_n must be >= 2");
  PknPropertyReport report;

  // (a) P_eta(k, n+1) > P_eta(k, n) for eta > 0
  for (const Rational& eta : eta_grid) {
    if (eta <= 0) continue;
    EtaDPTable table = EtaDPTable::build(max_n, eta);
    for (int n = 1; n + 1 <= max_n; ++n)
      for (int k = 1; k <= n; ++k)
        if (!(p_eta(k, n + 1, table) > p_eta(k, n, table))) {
          report.eta_monotone_in_n = false;
          report.counterexamples.push_back("(a) eta=" + rat_str(eta) + " " +
                                           state_str(k, n));
        }
  }

  // exact P values for the rest
  std::vector<std::vector<PValue>> pv(std::size_t(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) {
    pv[n].resize(std::size_t(n) + 1);
    for (int k = 1; k <= n; ++k) pv[n][k] = p(k, n);
  }

  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k < n; ++k) {
      const Rational& pkn = pv[n][k].value;
      // (b) P(k,n) < P(k-1,n-1); trivial for k=1 since P(0,n-1) is infinite
      if (k > 1 && !(pkn < pv[n - 1][k - 1].value)) {
        report.p_decreasing_diagonal = false;
        report.counterexamples.push_back("(b) " + state_str(k, n));
      }
      // (c) (k-1)/k * P(k-1,n-1) <= P(k,n), equality iff n = k+1
      if (k > 1) {
        Rational lhs = Rational(k - 1, k) * pv[n - 1][k - 1].value;
        bool equal = lhs == pkn;
        if (!(lhs <= pkn) || (equal != (n == k + 1))) {
          report.ratio_bound = false;
          report.counterexamples.push_back("(c) " + state_str(k, n));
        }
      }
      // (d) (n-k)/(2k) <= P(k,n), equality exactly at k in {1, n-1}
      Rational low = Rational(n - k, 2 * k);
      bool boundary = (k == 1 || k == n - 1);
      if (!(low <= pkn) || ((low == pkn) != boundary)) {
        report.half_ratio_lower_bound = false;
        report.counterexamples.push_back("(d) " + state_str(k, n));
      }
    }
    // (e) P(1,n) = (n-1)/2
    if (pv[n][1].value != Rational(n - 1, 2)) {
      report.p1n_exact = false;
      report.counterexamples.push_back("(e) n=" + std::to_string(n));
    }
    // (f) Stop decision at (k-1, n-1) when eta = P(k,n)
    for (int k = 1; k <= n; ++k) {
      if (pv[n][k].certificate.decision(k - 1, n - 1) != Decision::Stop) {
        report.stop_at_k1_n1 = false;
        report.counterexamples.push_back("(f) " + state_str(k, n));
      }
    }
  }
  return report;
}

}  // namespace rodt
