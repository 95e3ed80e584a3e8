#include "rodt/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <stdexcept>

using namespace rodt;

namespace {

std::pair<int, std::string> run(const RunConfig& config) {
  std::ostringstream out;
  int code = run_command(config, out);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("parse_formula_arg") {
  FormulaSpec f = parse_formula_arg("2,3,2");
  CHECK(f.schedule == FormulaSpec::Schedule::Constant);
  CHECK(f.gate.k == 2);
  CHECK(f.gate.n == 3);
  CHECK(f.depth == 2);
  FormulaSpec a = parse_formula_arg("and,2,3");
  CHECK(a.schedule == FormulaSpec::Schedule::Alternating);
  CHECK(a.root_kind == GateKind::AND);
  CHECK(a.fanout == 2);
  CHECK(a.depth == 3);
  CHECK(parse_formula_arg("or,3,1").root_kind == GateKind::OR);
  CHECK_THROWS_AS(parse_formula_arg("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula_arg("x,3,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula_arg("4,3,1"), std::invalid_argument);
}

TEST_CASE("RDT_SEED overrides the configured seed") {
  RunConfig config;
  config.seed = 5;
  unsetenv("RDT_SEED");
  apply_env_overrides(config);
  CHECK(config.seed == 5);
  setenv("RDT_SEED", "99", 1);
  apply_env_overrides(config);
  CHECK(config.seed == 99);
  setenv("RDT_SEED", "banana", 1);
  CHECK_THROWS_AS(apply_env_overrides(config), std::invalid_argument);
  setenv("RDT_SEED", "12x", 1);
  CHECK_THROWS_AS(apply_env_overrides(config), std::invalid_argument);
  unsetenv("RDT_SEED");
}

TEST_CASE("pkn emits the frozen table rows") {
  RunConfig config;
  config.subcommand = "pkn";
  config.n_max = 4;
  auto [code, text] = run(config);
  CHECK(code == 0);
  CHECK(text.find("k,n,p,p_float,lower,equality\n") == 0);
  CHECK(text.find("2,3,1/4,0.25,1/4,1\n") != std::string::npos);
  CHECK(text.find("2,4,5/9,") != std::string::npos);
  CHECK(text.find("0,3,inf,inf,inf,1\n") != std::string::npos);

  RunConfig single;
  single.subcommand = "pkn";
  single.k = 1;
  single.n = 10;
  auto [code2, text2] = run(single);
  CHECK(code2 == 0);
  CHECK(text2.find("1,10,9/2,") != std::string::npos);
}

TEST_CASE("pkn json is schema-tagged and parseable") {
  RunConfig config;
  config.subcommand = "pkn";
  config.k = 2;
  config.n = 3;
  config.format = "json";
  auto [code, text] = run(config);
  CHECK(code == 0);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "pkn");
  CHECK(doc["rows"][0]["p"] == "1/4");
  CHECK(doc["rows"][0]["equality"] == true);
}

TEST_CASE("pkn usage errors exit 2") {
  RunConfig config;
  config.subcommand = "pkn";
  auto [code, text] = run(config);
  CHECK(code == 2);
  CHECK(text.find("error:") != std::string::npos);

  config.k = 4;
  config.n = 3;
  CHECK(run(config).first == 2);

  config.k = 2;
  config.format = "yaml";
  CHECK(run(config).first == 2);
}

TEST_CASE("identical config produces byte-identical output") {
  RunConfig config;
  config.subcommand = "simulate";
  config.k = 2;
  config.n = 3;
  config.depth = 2;
  config.trials = 2000;
  config.seed = 7;
  auto first = run(config);
  auto second = run(config);
  CHECK(first.first == second.first);
  CHECK(first.second == second.second);

  RunConfig table;
  table.subcommand = "bounds";
  table.k = 2;
  table.n = 4;
  CHECK(run(table).second == run(table).second);
}

TEST_CASE("bounds csv carries comment header and rows") {
  RunConfig config;
  config.subcommand = "bounds";
  config.k = 2;
  config.n = 3;
  config.d_max = 2;
  auto [code, text] = run(config);
  CHECK(code == 0);
  CHECK(text.find("# k=2 n=3") == 0);
  CHECK(text.find("lambda_lower_generic=2.5") != std::string::npos);
  CHECK(text.find("\nd,c1_lower,c0_lower,scalar_lower,phi_upper,psi_upper,"
                  "lambda_lower,lambda_upper\n") != std::string::npos);
  CHECK(text.find("\n1,5/2,5/2,5/2,8/3,8/3,2.5,") != std::string::npos);
  CHECK(text.find("\n2,25/4,25/4,25/4,64/9,64/9,") != std::string::npos);

  config.thm3_check = true;
  auto [code2, text2] = run(config);
  CHECK(code2 == 0);
  CHECK(text2.find("thm3_consistent=0") != std::string::npos);
}

TEST_CASE("bounds andor mode and usage errors") {
  RunConfig config;
  config.subcommand = "bounds";
  config.andor = true;
  config.n = 2;
  config.d_max = 2;
  auto [code, text] = run(config);
  CHECK(code == 0);
  CHECK(text.find("lambda_per_two_levels=2.84307033082") != std::string::npos);
  CHECK(text.find("trace=17/4 det=4/1") != std::string::npos);
  CHECK(text.find("\n2,3/1,11/4,11/4,3/1,11/4,") != std::string::npos);

  RunConfig bad;
  bad.subcommand = "bounds";
  bad.k = 9;
  CHECK(run(bad).first == 2);
  bad.k = 1;
  bad.n = 3;
  CHECK(run(bad).first == 2);
}

TEST_CASE("bounds json mirrors the csv content") {
  RunConfig config;
  config.subcommand = "bounds";
  config.k = 2;
  config.n = 4;
  config.d_max = 1;
  config.format = "json";
  auto [code, text] = run(config);
  CHECK(code == 0);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["schema"] == 1);
  CHECK(doc["mode"] == "exact-p");
  CHECK(doc["rows"][1]["c1_lower"] == "28/9");
  CHECK(doc["rows"][1]["c0_lower"] == "7/2");
  CHECK(doc["rows"][1]["phi_upper"] == "10/3");
  CHECK(doc["lambda_lower"].get<double>() ==
        doctest::Approx(3.3975274678557508).epsilon(1e-12));

  config.generic_p = true;
  nlohmann::json generic = nlohmann::json::parse(run(config).second);
  CHECK(generic["mode"] == "generic-p");
  CHECK(generic["rows"][1]["c1_lower"] == "3/1");
}

TEST_CASE("simulate passes its own four-sigma gate on a healthy run") {
  RunConfig config;
  config.subcommand = "simulate";
  config.k = 2;
  config.n = 3;
  config.depth = 2;
  config.trials = 20000;
  config.seed = 7;
  auto [code, text] = run(config);
  CHECK(code == 0);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["schema"] == 1);
  CHECK(doc["exact"]["phi"] == "64/9");
  CHECK(doc["exact"]["mixture"] == "64/9");
  CHECK(doc["pass"] == true);
  CHECK(doc["conditional"]["1"]["count"].get<long long>() +
            doc["conditional"]["0"]["count"].get<long long>() ==
        20000);

  config.condition = 1;
  nlohmann::json cond = nlohmann::json::parse(run(config).second);
  CHECK(cond["conditional"]["0"]["count"] == 0);
  CHECK(cond["conditional"]["1"]["count"] == 20000);

  config.condition = 7;
  CHECK(run(config).first == 2);
}

TEST_CASE("simulate depth 0 is exactly one query") {
  RunConfig config;
  config.subcommand = "simulate";
  config.depth = 0;
  config.trials = 10;
  auto [code, text] = run(config);
  CHECK(code == 0);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["mean"] == 1.0);
  CHECK(doc["variance"] == 0.0);
  CHECK(doc["pass"] == true);
}

TEST_CASE("oracle subcommand emits the exact value and certificate head") {
  RunConfig config;
  config.subcommand = "oracle";
  config.formula = "2,3,1";
  auto [code, text] = run(config);
  CHECK(code == 0);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["value"] == "8/3");
  CHECK(doc["root_query"] == 0);
  CHECK(doc["states_explored"].get<long long>() > 0);

  config.c0 = "2";
  nlohmann::json heavy = nlohmann::json::parse(run(config).second);
  CHECK(heavy["value"] == "4/1");

  config.c0 = "nonsense";
  CHECK(run(config).first == 2);

  RunConfig missing;
  missing.subcommand = "oracle";
  CHECK(run(missing).first == 2);

  RunConfig big;
  big.subcommand = "oracle";
  big.formula = "2,4,2";
  CHECK(run(big).first == 2);
}

TEST_CASE("verify exits zero and prints a PASS per property") {
  RunConfig config;
  config.subcommand = "verify";
  config.n_max = 4;
  auto [code, text] = run(config);
  CHECK(code == 0);
  CHECK(text.find("PASS pkn_eta_monotone_in_n") != std::string::npos);
  CHECK(text.find("PASS bounds_thm2_matches_delta_eigenvalue") !=
        std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("0 failures") != std::string::npos);

  config.thm3 = true;
  auto [code2, text2] = run(config);
  CHECK(code2 == 0);
  CHECK(text2.find("WARN thm3_printed_form") != std::string::npos);
}

TEST_CASE("unknown subcommand exits 2") {
  RunConfig config;
  config.subcommand = "frobnicate";
  CHECK(run(config).first == 2);
}
