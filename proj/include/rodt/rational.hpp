#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rodt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" rendering; denominator always present and positive
// ("0/1", "-1/4", "8/3").
std::string rat_str(const Rational& r);

// Accepts "num/den", plain integers, and plain decimals ("0.25", "-3.5").
// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

// Shortest-ish fixed formatting used in CSV cells ("%.12g").
std::string fmt_g(double x);

// Exact binomial coefficient; zero when k is out of range.
BigInt binomial(int n, int k);

}  // namespace rodt
