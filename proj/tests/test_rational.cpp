#include "rodt/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rodt;

TEST_CASE("rat_str always carries a positive denominator") {
  CHECK(rat_str(Rational(0)) == "0/1");
  CHECK(rat_str(Rational(8, 3)) == "8/3");
  CHECK(rat_str(Rational(-1, 4)) == "-1/4");
  CHECK(rat_str(Rational(6, 4)) == "3/2");
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("-.25") == Rational(-1, 4));
}

TEST_CASE("parse_rational accepts fractions, integers, decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-1/4") == Rational(-1, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3.5") == Rational(-7, 2));
  CHECK(parse_rational("2.") == Rational(2));
}

TEST_CASE("parse_rational round trips rat_str") {
  for (Rational r : {Rational(11, 13), Rational(-361, 52), Rational(0),
                     Rational(104, 15)})
    CHECK(parse_rational(rat_str(r)) == r);
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "x", "1/", "/3", "1/0", "1.2.3", "2/3/4", "1e5",
                          " 1", "--2"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("to_double and fmt_g") {
  CHECK(to_double(Rational(1, 4)) == 0.25);
  CHECK(fmt_g(2.5) == "2.5");
  CHECK(fmt_g(0.25) == "0.25");
  // %.12g keeps 12 significant digits
  CHECK(fmt_g(8.0 / 3.0) == "2.66666666667");
}

TEST_CASE("binomial is exact and zero out of range") {
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(30, 15) == BigInt("155117520"));
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
  // Pascal identity on a band of cells
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}
