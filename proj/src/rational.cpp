#include "rodt/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace rodt {

std::string rat_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool signed_digits(const std::string& s) {
  std::size_t at = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  return digits_only(s.substr(at));
}

[[noreturn]] void bad(const std::string& text) {
  throw std::invalid_argument("bad rational literal: " + text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num_part = text.substr(0, slash);
    std::string den_part = text.substr(slash + 1);
    if (!signed_digits(num_part) || !signed_digits(den_part)) bad(text);
    BigInt num(num_part);
    BigInt den(den_part);
    if (den == 0) bad(text);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!signed_digits(text)) bad(text);
    return Rational(BigInt(text));
  }
  std::string head = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  bool neg = !head.empty() && head[0] == '-';
  if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
  if (!head.empty() && !digits_only(head)) bad(text);
  if (!frac.empty() && !digits_only(frac)) bad(text);
  if (head.empty() && frac.empty()) bad(text);
  if (head.empty()) head = "0";
  if (frac.empty()) return neg ? Rational(-BigInt(head)) : Rational(BigInt(head));
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Rational value = Rational(BigInt(head) * scale + BigInt(frac), scale);
  return neg ? -value : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string fmt_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace rodt
