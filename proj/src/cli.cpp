#include "rodt/cli.hpp"

#include "rodt/bounds.hpp"
#include "rodt/directional.hpp"
#include "rodt/oracle.hpp"
#include "rodt/pkn.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rodt {

using ordered_json = nlohmann::ordered_json;

namespace {

int usage_error(std::ostream& out, const std::string& message) {
  out << "error: " << message << "\n";
  return 2;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

bool relative_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

const std::vector<Rational>& default_grid() {
  static const std::vector<Rational> grid{Rational(1, 4), Rational(1, 2),
                                          Rational(1), Rational(2)};
  return grid;
}

// P(k,n) cache for commands that sweep many cells.
class PCache {
 public:
  const Rational& get(int k, int n) {
    auto key = std::make_pair(k, n);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, p(k, n).value).first;
    return it->second;
  }

  CostMatrix gamma_exact_cached(int k, int n) {
    return gamma_matrix(k, n, get(k, n), get(n - k + 1, n));
  }

 private:
  std::map<std::pair<int, int>, Rational> cache_;
};

}  // namespace

void apply_env_overrides(RunConfig& config) {
  if (const char* env = std::getenv("RDT_SEED")) {
    std::string text(env);
    if (text.empty()) return;
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(text, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("RDT_SEED is not a valid seed: " + text);
    }
    if (used != text.size())
      throw std::invalid_argument("RDT_SEED is not a valid seed: " + text);
    config.seed = value;
  }
}

FormulaSpec parse_formula_arg(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3)
    throw std::invalid_argument(
        "formula must be \"k,n,d\" or \"and,n,d\" or \"or,n,d\"");
  int n = std::stoi(parts[1]);
  int d = std::stoi(parts[2]);
  if (parts[0] == "and") return FormulaSpec::alternating(n, GateKind::AND, d);
  if (parts[0] == "or") return FormulaSpec::alternating(n, GateKind::OR, d);
  return FormulaSpec::constant(std::stoi(parts[0]), n, d);
}

// ---------------------------------------------------------------- pkn

namespace {

struct PknRow {
  int k, n;
  bool infinite;
  Rational value;
  double value_float;
  Rational lower;
  bool equality;
};

PknRow make_pkn_row(int k, int n, bool float_mode) {
  PknRow row;
  row.k = k;
  row.n = n;
  PValue pv = p(k, n);
  row.infinite = pv.infinite;
  if (pv.infinite) {
    row.value_float = 0;
    row.equality = true;  // bound (n-k)/(2k) is infinite too
    return row;
  }
  row.value = pv.value;
  row.value_float = float_mode ? p_float(k, n) : to_double(pv.value);
  row.lower = Rational(n - k, 2 * k);
  row.equality = row.value == row.lower;
  return row;
}

}  // namespace

int cmd_pkn(const RunConfig& config, std::ostream& out) {
  std::vector<std::pair<int, int>> cells;
  if (config.k >= 0 && config.n >= 1) {
    if (config.k > config.n)
      return usage_error(out, "pkn needs 0 <= k <= n");
    cells.emplace_back(config.k, config.n);
  } else if (config.n_max >= 1) {
    for (int n = 1; n <= config.n_max; ++n)
      for (int k = 0; k <= n; ++k) cells.emplace_back(k, n);
  } else {
    return usage_error(out, "pkn needs --k and --n, or --n-max");
  }
  bool float_mode = config.mode == "float";
  std::string format = config.format.empty() ? "csv" : config.format;

  std::vector<PknRow> rows;
  rows.reserve(cells.size());
  for (auto [k, n] : cells) rows.push_back(make_pkn_row(k, n, float_mode));

  if (format == "json") {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "pkn";
    doc["mode"] = float_mode ? "float" : "exact";
    doc["rows"] = ordered_json::array();
    for (const PknRow& row : rows) {
      ordered_json cell;
      cell["k"] = row.k;
      cell["n"] = row.n;
      if (row.infinite) {
        cell["p"] = "inf";
        cell["p_float"] = "inf";
        cell["lower"] = "inf";
      } else {
        cell["p"] = rat_str(row.value);
        cell["p_float"] = row.value_float;
        cell["lower"] = rat_str(row.lower);
      }
      cell["equality"] = row.equality;
      doc["rows"].push_back(std::move(cell));
    }
    out << doc.dump() << "\n";
  } else if (format == "csv") {
    out << "k,n,p,p_float,lower,equality\n";
    for (const PknRow& row : rows) {
      if (row.infinite)
        out << row.k << "," << row.n << ",inf,inf,inf,1\n";
      else
        out << row.k << "," << row.n << "," << rat_str(row.value) << ","
            << fmt_g(row.value_float) << "," << rat_str(row.lower) << ","
            << (row.equality ? 1 : 0) << "\n";
    }
  } else {
    return usage_error(out, "unknown format: " + format);
  }
  return 0;
}

// ---------------------------------------------------------------- bounds

namespace {

struct AndOrTable {
  AndOrProduct product;
  std::pair<double, double> thm1;
  std::vector<BoundsRow> rows;
};

AndOrTable build_andor_table(int n, GateKind root, int d_max) {
  AndOrTable table;
  table.product = andor_product(n);
  table.thm1 = closed_form_thm1(n);
  CostMatrix a = gamma_matrix(n, n, 0, Rational(n - 1, 2));
  CostMatrix b = gamma_matrix(1, n, Rational(n - 1, 2), 0);
  for (int d = 0; d <= d_max; ++d) {
    CostPair lower{1, 1};
    for (int level = d - 1; level >= 0; --level) {
      bool root_kind_level = level % 2 == 0;
      const CostMatrix& m =
          (root == GateKind::AND) == root_kind_level ? a : b;
      lower = apply(m, lower);
    }
    DirectionalCost upper = exact_cost(FormulaSpec::alternating(n, root, d));
    BoundsRow row;
    row.d = d;
    row.lower_generic = lower;
    row.lower_exact = lower;  // P(n,n) and P(1,n) are exact already
    row.scalar_generic = std::min(lower.c1, lower.c0);
    row.scalar_exact = row.scalar_generic;
    row.phi = upper.phi;
    row.psi = upper.psi;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

int cmd_bounds(const RunConfig& config, std::ostream& out) {
  std::string format = config.format.empty() ? "csv" : config.format;
  if (format != "csv" && format != "json")
    return usage_error(out, "unknown format: " + format);

  if (config.andor) {
    if (config.n < 2) return usage_error(out, "bounds --andor needs --n >= 2");
    if (config.root != "and" && config.root != "or")
      return usage_error(out, "--root must be and|or");
    GateKind root = config.root == "or" ? GateKind::OR : GateKind::AND;
    AndOrTable table = build_andor_table(config.n, root, config.d_max);
    double lambda = table.product.bound.lambda;
    if (format == "json") {
      ordered_json doc;
      doc["schema"] = 1;
      doc["command"] = "bounds";
      doc["mode"] = "andor";
      doc["n"] = config.n;
      doc["root"] = config.root;
      doc["lambda_per_two_levels"] = lambda;
      doc["thm1_first"] = table.thm1.first;
      doc["thm1_second"] = table.thm1.second;
      doc["trace"] = rat_str(table.product.bound.trace);
      doc["det"] = rat_str(table.product.bound.det);
      doc["rows"] = ordered_json::array();
      for (const BoundsRow& row : table.rows) {
        ordered_json cell;
        cell["d"] = row.d;
        cell["c1_lower"] = rat_str(row.lower_generic.c1);
        cell["c0_lower"] = rat_str(row.lower_generic.c0);
        cell["scalar_lower"] = rat_str(row.scalar_generic);
        cell["phi_upper"] = rat_str(row.phi);
        cell["psi_upper"] = rat_str(row.psi);
        doc["rows"].push_back(std::move(cell));
      }
      out << doc.dump() << "\n";
    } else {
      out << "# mode=andor n=" << config.n << " root=" << config.root << "\n";
      out << "# lambda_per_two_levels=" << fmt_g(lambda) << "\n";
      out << "# thm1_first=" << fmt_g(table.thm1.first)
          << " thm1_second=" << fmt_g(table.thm1.second) << "\n";
      out << "# trace=" << rat_str(table.product.bound.trace)
          << " det=" << rat_str(table.product.bound.det) << "\n";
      out << "d,c1_lower,c0_lower,scalar_lower,phi_upper,psi_upper,"
             "lambda_lower,lambda_upper\n";
      for (const BoundsRow& row : table.rows)
        out << row.d << "," << rat_str(row.lower_generic.c1) << ","
            << rat_str(row.lower_generic.c0) << ","
            << rat_str(row.scalar_generic) << "," << rat_str(row.phi) << ","
            << rat_str(row.psi) << "," << fmt_g(lambda) << "," << fmt_g(lambda)
            << "\n";
    }
    return 0;
  }

  if (!(1 < config.k && config.k < config.n))
    return usage_error(out, "bounds needs 1 < k < n (or --andor)");
  BoundsReport report = report_bounds(config.k, config.n, config.d_max);
  double lambda_lower =
      config.generic_p ? report.lambda_generic.lambda : report.lambda_exact.lambda;
  double lambda_upper = report.lambda_upper.lambda;
  double thm2 = closed_form_thm2(config.k, config.n);
  Thm3Result thm3{};
  if (config.thm3_check) thm3 = closed_form_thm3(config.k, config.n);

  if (format == "json") {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "bounds";
    doc["mode"] = config.generic_p ? "generic-p" : "exact-p";
    doc["k"] = config.k;
    doc["n"] = config.n;
    doc["lambda_lower"] = lambda_lower;
    doc["lambda_upper"] = lambda_upper;
    doc["lambda_lower_generic"] = report.lambda_generic.lambda;
    doc["lambda_lower_exactp"] = report.lambda_exact.lambda;
    doc["thm2"] = thm2;
    if (config.thm3_check) {
      doc["thm3_printed"] = thm3.printed;
      doc["thm3_matrix"] = thm3.matrix_derived;
      doc["thm3_consistent"] = thm3.consistent;
    }
    doc["rows"] = ordered_json::array();
    for (const BoundsRow& row : report.rows) {
      const CostPair& pair =
          config.generic_p ? row.lower_generic : row.lower_exact;
      const Rational& scalar =
          config.generic_p ? row.scalar_generic : row.scalar_exact;
      ordered_json cell;
      cell["d"] = row.d;
      cell["c1_lower"] = rat_str(pair.c1);
      cell["c0_lower"] = rat_str(pair.c0);
      cell["scalar_lower"] = rat_str(scalar);
      cell["phi_upper"] = rat_str(row.phi);
      cell["psi_upper"] = rat_str(row.psi);
      doc["rows"].push_back(std::move(cell));
    }
    out << doc.dump() << "\n";
  } else {
    out << "# k=" << config.k << " n=" << config.n << " variant="
        << (config.generic_p ? "generic-p" : "exact-p") << "\n";
    out << "# lambda_lower_generic=" << fmt_g(report.lambda_generic.lambda)
        << " lambda_lower_exactp=" << fmt_g(report.lambda_exact.lambda)
        << " lambda_upper=" << fmt_g(lambda_upper) << "\n";
    out << "# thm2=" << fmt_g(thm2) << "\n";
    if (config.thm3_check)
      out << "# thm3_printed=" << fmt_g(thm3.printed)
          << " thm3_matrix=" << fmt_g(thm3.matrix_derived)
          << " thm3_consistent=" << (thm3.consistent ? 1 : 0) << "\n";
    out << "d,c1_lower,c0_lower,scalar_lower,phi_upper,psi_upper,"
           "lambda_lower,lambda_upper\n";
    for (const BoundsRow& row : report.rows) {
      const CostPair& pair =
          config.generic_p ? row.lower_generic : row.lower_exact;
      const Rational& scalar =
          config.generic_p ? row.scalar_generic : row.scalar_exact;
      out << row.d << "," << rat_str(pair.c1) << "," << rat_str(pair.c0) << ","
          << rat_str(scalar) << "," << rat_str(row.phi) << ","
          << rat_str(row.psi) << "," << fmt_g(lambda_lower) << ","
          << fmt_g(lambda_upper) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- simulate

namespace {

FormulaSpec formula_from_config(const RunConfig& config) {
  if (config.andor) {
    if (config.n < 1) throw std::invalid_argument("--andor needs --n");
    if (config.root != "and" && config.root != "or")
      throw std::invalid_argument("--root must be and|or");
    return FormulaSpec::alternating(
        config.n, config.root == "or" ? GateKind::OR : GateKind::AND,
        config.depth);
  }
  if (config.depth == 0 && config.k < 0 && config.n < 1)
    return FormulaSpec::constant(1, 1, 0);  // bare variable
  if (config.k < 1 || config.n < 1)
    throw std::invalid_argument("needs --k and --n (or --andor, or --depth 0)");
  return FormulaSpec::constant(config.k, config.n, config.depth);
}

}  // namespace

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  if (config.trials < 1) return usage_error(out, "--trials must be >= 1");
  if (config.depth < 0) return usage_error(out, "--depth must be >= 0");
  if (config.condition != -1 && config.condition != 0 && config.condition != 1)
    return usage_error(out, "--condition must be 0 or 1");
  FormulaSpec f;
  try {
    f = formula_from_config(config);
  } catch (const std::invalid_argument& e) {
    return usage_error(out, std::string("simulate: ") + e.what());
  }
  std::optional<int> condition;
  if (config.condition != -1) condition = config.condition;
  SimulationReport report = monte_carlo(f, config.trials, config.seed, condition);

  ReluctantCounts counts = reluctant_counts(f);
  Rational mixture =
      (Rational(counts.n1) * report.exact_phi +
       Rational(counts.n0) * report.exact_psi) /
      Rational(counts.n0 + counts.n1);
  if (condition) mixture = *condition ? report.exact_phi : report.exact_psi;

  bool pass = true;
  auto check_side = [&](std::uint64_t count, double mean, double stddev,
                        const Rational& exact) {
    if (count == 0) return;
    double se = count > 1 ? stddev / std::sqrt(double(count)) : 0.0;
    if (std::abs(mean - to_double(exact)) > 4 * se) pass = false;
  };
  check_side(report.count1, report.mean1, report.stddev1, report.exact_phi);
  check_side(report.count0, report.mean0, report.stddev0, report.exact_psi);
  double overall_se =
      report.trials > 1 ? std::sqrt(report.variance / double(report.trials))
                        : 0.0;
  if (std::abs(report.mean - to_double(mixture)) > 4 * overall_se) pass = false;

  std::string format = config.format.empty() ? "json" : config.format;
  if (format == "json") {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "simulate";
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["depth"] = report.depth;
    doc["mean"] = report.mean;
    doc["variance"] = report.variance;
    ordered_json cond1;
    cond1["count"] = report.count1;
    cond1["mean"] = report.mean1;
    cond1["stddev"] = report.stddev1;
    ordered_json cond0;
    cond0["count"] = report.count0;
    cond0["mean"] = report.mean0;
    cond0["stddev"] = report.stddev0;
    doc["conditional"]["1"] = std::move(cond1);
    doc["conditional"]["0"] = std::move(cond0);
    doc["exact"]["phi"] = rat_str(report.exact_phi);
    doc["exact"]["psi"] = rat_str(report.exact_psi);
    doc["exact"]["mixture"] = rat_str(mixture);
    doc["pass"] = pass;
    out << doc.dump() << "\n";
  } else if (format == "csv") {
    out << "trials,seed,depth,mean,variance,count1,mean1,count0,mean0,"
           "phi,psi,pass\n";
    out << report.trials << "," << report.seed << "," << report.depth << ","
        << fmt_g(report.mean) << "," << fmt_g(report.variance) << ","
        << report.count1 << "," << fmt_g(report.mean1) << "," << report.count0
        << "," << fmt_g(report.mean0) << "," << rat_str(report.exact_phi)
        << "," << rat_str(report.exact_psi) << "," << (pass ? 1 : 0) << "\n";
  } else {
    return usage_error(out, "unknown format: " + format);
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- verify

namespace {

struct VerifyContext {
  std::ostream& out;
  int passed = 0, warned = 0, failed = 0;

  void pass(const std::string& line) {
    ++passed;
    out << "PASS " << line << "\n";
  }
  void warn(const std::string& line) {
    ++warned;
    out << "WARN " << line << "\n";
  }
  void fail(const std::string& line) {
    ++failed;
    out << "FAIL " << line << "\n";
  }
  void check(bool ok, const std::string& line) { ok ? pass(line) : fail(line); }
};

void verify_pkn_section(VerifyContext& ctx, int n_max) {
  PknPropertyReport report = verify_pkn_properties(n_max, default_grid());
  std::string suffix = " n<=" + std::to_string(n_max);
  ctx.check(report.eta_monotone_in_n, "pkn_eta_monotone_in_n" + suffix);
  ctx.check(report.p_decreasing_diagonal, "pkn_p_decreasing_diagonal" + suffix);
  ctx.check(report.ratio_bound, "pkn_ratio_bound" + suffix);
  ctx.check(report.half_ratio_lower_bound, "pkn_half_ratio_lower_bound" + suffix);
  ctx.check(report.p1n_exact, "pkn_p1n_exact" + suffix);
  ctx.check(report.stop_at_k1_n1, "pkn_stop_at_k1_n1" + suffix);
  for (const std::string& cex : report.counterexamples)
    ctx.out << "  counterexample " << cex << "\n";
}

void verify_bounds_section(VerifyContext& ctx) {
  bool thm1_ok = true;
  bool ab_exact_ok = true;
  for (int n = 2; n <= 50; ++n) {
    auto [first, second] = closed_form_thm1(n);
    AndOrProduct product = andor_product(n);
    if (!relative_close(first, second, 1e-9) ||
        !relative_close(first, product.bound.lambda, 1e-9))
      thm1_ok = false;
    if (n <= 25) {
      if (product.bound.det != Rational(n) * n ||
          product.bound.trace != Rational(n) + Rational((n + 1) * (n + 1), 4))
        ab_exact_ok = false;
      if (trace(product.ba) != product.bound.trace ||
          det(product.ba) != product.bound.det)
        ab_exact_ok = false;
    }
  }
  ctx.check(thm1_ok, "bounds_thm1_two_forms_and_ab n<=50");
  ctx.check(ab_exact_ok, "bounds_ab_trace_det_exact n<=25");

  bool thm2_ok = true;
  bool order_ok = true;
  bool coincide_ok = true;
  bool dominate_ok = true;
  PCache cache;
  for (int n = 2; n <= 25; ++n) {
    if (delta_matrix(n, n) != gamma_matrix(n, n, 0, Rational(n - 1, 2)) ||
        delta_matrix(1, n) != gamma_matrix(1, n, Rational(n - 1, 2), 0))
      coincide_ok = false;
    for (int k = 2; k < n; ++k) {
      SpectralBound upper = largest_eigenvalue(delta_matrix(k, n));
      if (!relative_close(closed_form_thm2(k, n), upper.lambda, 1e-9))
        thm2_ok = false;
      SpectralBound generic = largest_eigenvalue(gamma_generic(k, n));
      SpectralBound exact =
          largest_eigenvalue(cache.gamma_exact_cached(k, n));
      if (compare_lambda(generic, upper) > 0 || compare_lambda(exact, upper) > 0)
        order_ok = false;
      if (n <= 12) {
        CostMatrix ge = gamma_generic(k, n);
        CostMatrix ex = cache.gamma_exact_cached(k, n);
        if (ex.m11 < ge.m11 || ex.m12 < ge.m12 || ex.m21 < ge.m21 ||
            ex.m22 < ge.m22)
          dominate_ok = false;
      }
    }
  }
  ctx.check(thm2_ok, "bounds_thm2_matches_delta_eigenvalue n<=25");
  ctx.check(order_ok, "bounds_lambda_lower_at_most_upper n<=25");
  ctx.check(coincide_ok, "bounds_delta_gamma_coincide_at_and_or n<=25");
  ctx.check(dominate_ok, "bounds_exact_p_dominates_generic n<=12");

  bool ratio_ok = true;
  PCache cache2;
  std::vector<CostMatrix> samples{gamma_generic(2, 3), gamma_generic(2, 4),
                                  gamma_generic(2, 5), gamma_generic(3, 5),
                                  cache2.gamma_exact_cached(2, 4)};
  for (const CostMatrix& m : samples) {
    double lambda = largest_eigenvalue(m).lambda;
    CostPair cost{1, 1};
    std::vector<double> ratio;
    double scale = 1;
    for (int d = 1; d <= 20; ++d) {
      cost = apply(m, cost);
      scale *= lambda;
      ratio.push_back(to_double(std::max(cost.c1, cost.c0)) / scale);
    }
    int direction = 0;
    for (std::size_t i = 1; i < ratio.size(); ++i) {
      double diff = ratio[i] - ratio[i - 1];
      if (std::abs(diff) <= 1e-12) continue;
      int s = diff > 0 ? 1 : -1;
      if (direction == 0) direction = s;
      if (s != direction) ratio_ok = false;
      if (i + 1 < ratio.size()) {
        double next = std::abs(ratio[i + 1] - ratio[i]);
        if (next > std::abs(diff) + 1e-12) ratio_ok = false;
      }
      if (ratio[i] <= 0 || ratio[i] > 4) ratio_ok = false;
    }
  }
  ctx.check(ratio_ok, "bounds_growth_ratio_monotone_converging d<=20");
}

void verify_oracle_section(VerifyContext& ctx) {
  bool slice_ok = true;
  std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2),
                             Rational(1), Rational(2)};
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Rational& eta : grid)
        if (p_eta(k, n, eta) != optimal_tree_over_slice(k, n, eta))
          slice_ok = false;
  ctx.check(slice_ok, "oracle_slice_matches_symmetric_dp n<=5");

  OracleResult base = optimal_expected_cost(
      FormulaSpec::constant(2, 3, 1), Distribution::reluctant(),
      CostModel{1, 1});
  ctx.check(base.value == Rational(8, 3), "oracle_f1_23_unit_cost_8_3");

  bool dir_ok = true;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 2; ++d) {
      for (int k = 1; k <= n; ++k) {
        FormulaSpec f = FormulaSpec::constant(k, n, d);
        auto [phi, psi] = directional_exact_small(f);
        DirectionalCost exact = exact_cost(f);
        if (phi != exact.phi || psi != exact.psi) dir_ok = false;
      }
      for (GateKind root : {GateKind::AND, GateKind::OR}) {
        if (n < 2) continue;
        FormulaSpec f = FormulaSpec::alternating(n, root, d);
        auto [phi, psi] = directional_exact_small(f);
        DirectionalCost exact = exact_cost(f);
        if (phi != exact.phi || psi != exact.psi) dir_ok = false;
      }
    }
  }
  ctx.check(dir_ok, "oracle_directional_order_enumeration d<=2 n<=3");

  bool shrink_ok = true;
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k < n; ++k) {
      for (CostModel cost : {CostModel{1, 1}, CostModel{2, 1}}) {
        ShrinkReport report = check_shrink_inequality(k, n, cost);
        if (!report.passed) shrink_ok = false;
        if (!report.avg_holds)
          ctx.warn("shrink_avg_form (" + std::to_string(k) + "," +
                   std::to_string(n) + ") c0=" + rat_str(cost.c0) + " c1=" +
                   rat_str(cost.c1) + ": lhs=" + rat_str(report.lhs) +
                   " avg=" + rat_str(report.rhs_avg) +
                   " min=" + rat_str(report.rhs_min));
      }
    }
  }
  ctx.check(shrink_ok, "oracle_shrink_min_form n<=5");
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out) {
  int n_max = config.n_max >= 2 ? config.n_max : 6;
  VerifyContext ctx{out};
  verify_pkn_section(ctx, n_max);
  verify_bounds_section(ctx);
  if (config.thm3) {
    Thm3Result thm3 = closed_form_thm3(2, 3);
    if (!thm3.consistent)
      ctx.warn("thm3_printed_form (2,3): printed=" + fmt_g(thm3.printed) +
               " matrix=" + fmt_g(thm3.matrix_derived) +
               " (printed radicand is not the matrix rate)");
    else
      ctx.fail("thm3_printed_form unexpectedly consistent at (2,3)");
  }
  if (config.with_oracle) verify_oracle_section(ctx);
  out << "verify: " << ctx.passed << " passed, " << ctx.warned
      << " warnings, " << ctx.failed << " failures\n";
  return ctx.failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  if (config.formula.empty())
    return usage_error(out, "oracle needs --formula \"k,n,d\"");
  FormulaSpec f;
  try {
    f = parse_formula_arg(config.formula);
  } catch (const std::exception& e) {
    return usage_error(out, std::string("oracle: ") + e.what());
  }
  Distribution dist = Distribution::reluctant();
  if (config.dist == "slice") {
    if (config.slice_k < 0)
      return usage_error(out, "oracle --dist slice needs --slice-k");
    dist = Distribution::slice_uniform(config.slice_k);
  } else if (config.dist != "reluctant") {
    return usage_error(out, "unknown dist: " + config.dist);
  }
  CostModel cost;
  try {
    cost.c0 = parse_rational(config.c0);
    cost.c1 = parse_rational(config.c1);
  } catch (const std::invalid_argument& e) {
    return usage_error(out, std::string("oracle: ") + e.what());
  }
  OracleResult result;
  try {
    result = optimal_expected_cost(f, dist, cost);
  } catch (const std::length_error& e) {
    return usage_error(out, std::string("oracle: ") + e.what());
  }
  ordered_json doc;
  doc["schema"] = 1;
  doc["command"] = "oracle";
  doc["formula"] = config.formula;
  doc["dist"] = config.dist;
  doc["c0"] = rat_str(cost.c0);
  doc["c1"] = rat_str(cost.c1);
  doc["value"] = rat_str(result.value);
  doc["value_float"] = to_double(result.value);
  doc["states_explored"] = result.states_explored;
  doc["root_query"] = result.root_query;
  doc["certificate_size"] = result.first_query.size();
  out << doc.dump() << "\n";
  return 0;
}

int run_command(const RunConfig& config, std::ostream& out) {
  if (config.subcommand == "pkn") return cmd_pkn(config, out);
  if (config.subcommand == "bounds") return cmd_bounds(config, out);
  if (config.subcommand == "simulate") return cmd_simulate(config, out);
  if (config.subcommand == "verify") return cmd_verify(config, out);
  if (config.subcommand == "oracle") return cmd_oracle(config, out);
  return usage_error(out, "unknown subcommand: " + config.subcommand);
}

}  // namespace rodt
