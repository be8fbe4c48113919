// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDSFORGE_RATIONAL_HPP_
#define EDSFORGE_RATIONAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace edsforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Int denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int int_pow(const Int& base, unsigned long exp);

// Integer exponents of either sign; negative exponents require base != 0.
// 0^0 is 1.
Rational rat_pow(const Rational& base, long long exp);

// Exact square roots; nullopt when the argument is not a perfect square.
std::optional<Int> exact_isqrt(const Int& n);
std::optional<Rational> exact_sqrt(const Rational& q);

Int binomial(long long n, long long k);

// "p/q", or just "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

// Accepts an optional sign, digits, and an optional "/denominator" part.
// Throws ParseError on anything else.
Rational parse_rational(const std::string& text);
Int parse_int(const std::string& text);

std::string join(const std::vector<Rational>& values, const std::string& sep);

}  // namespace edsforge

#endif  // EDSFORGE_RATIONAL_HPP_
