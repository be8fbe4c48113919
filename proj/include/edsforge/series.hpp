// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Truncated formal power series over exact rationals.
//
// A Series carries its coefficients together with its order: the number of
// leading coefficients that are trustworthy. Every operation computes the
// order of its result from the orders of its inputs (min for arithmetic,
// shifted for prefix operations), so a value can never silently present
// garbage coefficients as exact ones.

#ifndef EDSFORGE_SERIES_HPP_
#define EDSFORGE_SERIES_HPP_

#include <cstddef>
#include <vector>

#include "edsforge/rational.hpp"

namespace edsforge {

class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  static Series zero(std::size_t order);
  static Series one(std::size_t order);
  // Low-order coefficients padded with zeros up to `order` (or truncated).
  static Series poly(std::vector<Rational> low, std::size_t order);

  std::size_t order() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Series truncate(std::size_t n) const;
  std::vector<Rational> head(std::size_t n) const;
  bool is_zero() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> c_;
};

Series operator-(const Series& s);
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Series& a, const Rational& k);
Series operator*(const Rational& k, const Series& a);

// Throws DivisionByZeroSeries unless b(0) != 0.
Series operator/(const Series& a, const Series& b);
Series inverse(const Series& s);

// Principal branch: the constant term of the result is the nonnegative root.
// Throws NonSquareConstantTerm unless s(0) is a nonzero rational square.
Series sqrt(const Series& s);

// f(g(x)); throws CompositionConstantTerm unless g(0) = 0.
Series compose(const Series& f, const Series& g);

// For g with g(0) != 0 (else RevertConstantTerm): the series r with
// r_n = [x^n] g(x)^-(n+1) / (n+1), i.e. (1/x) * (compositional inverse of
// x*g(x)).
Series revert(const Series& g);

// Classical compositional inverse of f with f(0) = 0, f'(0) != 0 (else
// RevertConstantTerm). Solved by triangular back-substitution; slower than
// revert() and kept as an independent route to the same answer.
Series compositional_inverse(const Series& f);

// g(x) -> (1/(1-rx)) g(x/(1-rx)). Preserves the Hankel transform.
Series binomial_transform(const Series& g, const Rational& r);

// g(x) -> g(x)/(1 - r x g(x)). Preserves the Hankel transform.
Series invert_transform(const Series& g, const Rational& r);

// (g - g_0 - ... - g_{k-1} x^{k-1}) / x^k; order shrinks by k.
// Throws PrefixTooLong when k exceeds the order.
Series drop_prefix(const Series& g, std::size_t k);

// x^k * g; order grows by k.
Series shift_up(const Series& g, std::size_t k);

}  // namespace edsforge

#endif  // EDSFORGE_SERIES_HPP_
