// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "edsforge/rational.hpp"

#include <cctype>
#include <sstream>

#include "edsforge/errors.hpp"

namespace edsforge {

Int int_pow(const Int& base, unsigned long exp) {
  Int r = 1;
  Int b = base;
  unsigned long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational rat_pow(const Rational& base, long long exp) {
  if (exp >= 0) {
    return Rational(int_pow(numerator(base), (unsigned long)exp),
                    int_pow(denominator(base), (unsigned long)exp));
  }
  if (base == 0) throw Error("rat_pow: negative power of zero");
  Int num = int_pow(denominator(base), (unsigned long)(-exp));
  Int den = int_pow(numerator(base), (unsigned long)(-exp));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::optional<Int> exact_isqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto rn = exact_isqrt(numerator(q));
  if (!rn) return std::nullopt;
  auto rd = exact_isqrt(denominator(q));
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Int& n) { return n.str(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit((unsigned char)c)) return false;
  }
  return true;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  return s.substr(b, e - b);
}

Int parse_signed_int(const std::string& raw, const std::string& context) {
  std::string s = trim(raw);
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (!all_digits(s))
    throw ParseError("not an integer: '" + raw + "' (" + context + ")");
  Int v(s);
  return neg ? -v : v;
}

}  // namespace

Int parse_int(const std::string& text) {
  return parse_signed_int(text, "integer");
}

Rational parse_rational(const std::string& text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(parse_signed_int(s, "rational"));
  Int num = parse_signed_int(s.substr(0, slash), "numerator");
  Int den = parse_signed_int(s.substr(slash + 1), "denominator");
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string join(const std::vector<Rational>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

}  // namespace edsforge
