// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Hankel determinants, Jacobi continued fractions, and Somos-4 recurrence
// fitting, all in exact arithmetic.

#ifndef EDSFORGE_HANKEL_HPP_
#define EDSFORGE_HANKEL_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "edsforge/series.hpp"

namespace edsforge {

// Fraction-free Bareiss elimination; every intermediate division is exact.
Int bareiss_determinant(std::vector<std::vector<Int>> m);

// Rational determinant: denominators are cleared row by row, the integer
// determinant is computed by Bareiss, and the factor is divided back out.
Rational determinant(const std::vector<std::vector<Rational>>& m);

// h_n = det [a_{i+j}], 0 <= i,j <= n, for n < count.
// Needs 2*count - 1 terms (InsufficientTerms).
std::vector<Rational> hankel_transform(const std::vector<Rational>& a,
                                       std::size_t count);

// h*_n: same matrix with the last row's indices shifted up by one.
// Needs 2*count terms.
std::vector<Rational> modified_hankel_transform(const std::vector<Rational>& a,
                                                std::size_t count);

// h~_n = h_n / base^(n^2 - 2n). Throws ZeroScaleBase when base = 0.
std::vector<Rational> rescale_hankel(const std::vector<Rational>& h,
                                     const Int& base);

struct HankelData {
  std::vector<Rational> h, hstar, htilde;

  friend bool operator==(const HankelData&, const HankelData&) = default;
};

HankelData hankel_data(const std::vector<Rational>& a, std::size_t count,
                       const Int& base);

// Coefficients of 1/(1 - alpha_0 x - beta_1 x^2/(1 - alpha_1 x - ...)).
// alphas[i] is alpha_i; betas[i] is beta_i with betas[0] = 1 by convention.
// `terminated` marks a continued fraction that closed off exactly (the tail
// vanished), in which case the expansion is exact to any depth. When a level
// could not be continued because a pivot vanished, `degenerate_at` holds the
// index of the first unavailable alpha.
struct JacobiFraction {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
  bool terminated = false;
  std::optional<std::size_t> degenerate_at;

  friend bool operator==(const JacobiFraction&, const JacobiFraction&) = default;
};

// Stripping levels off the series g (g(0) must be 1). The throwing variant
// raises ZeroHankelPivot where the partial variant records degenerate_at and
// returns the maximal prefix.
JacobiFraction jacobi_from_series(const Series& g);
JacobiFraction jacobi_from_series_partial(const Series& g);

// From Hankel data: alpha_n = h*_n/h_n - h*_{n-1}/h_{n-1} (alpha_0 =
// h*_0/h_0) and beta_n = h_{n-2} h_n / h_{n-1}^2 with h_{-1} = 1.
JacobiFraction jacobi_from_hankel(const std::vector<Rational>& h,
                                  const std::vector<Rational>& hstar);
JacobiFraction jacobi_from_hankel_partial(const std::vector<Rational>& h,
                                          const std::vector<Rational>& hstar);

// Bottom-up evaluation. L levels determine 2L coefficients exactly; asking
// for more throws InsufficientDepth unless the fraction terminated.
Series series_from_jacobi(const JacobiFraction& jf, std::size_t n);

struct SomosParams {
  Rational s, t;

  friend bool operator==(const SomosParams&, const SomosParams&) = default;
};

// Result of fitting h_n h_{n-4} = s h_{n-1} h_{n-3} + t h_{n-2}^2.
// The parameters come from the first pair of linearly independent windows
// (scanning forward past degenerate ones); `underdetermined` is set when no
// such pair exists. `first_violation` is the first window the fitted
// parameters fail to satisfy, if any.
struct SomosFit {
  std::optional<SomosParams> params;
  bool underdetermined = false;
  std::size_t windows = 0;
  std::optional<std::size_t> first_violation;

  bool consistent() const { return params && !first_violation; }

  friend bool operator==(const SomosFit&, const SomosFit&) = default;
};

// Requires at least 6 terms (InsufficientTerms).
SomosFit somos4_fit(const std::vector<Rational>& h);

struct SomosCheck {
  std::size_t windows = 0;
  std::optional<std::size_t> first_failure;

  bool ok() const { return !first_failure; }
};

SomosCheck somos4_verify(const std::vector<Rational>& h, const SomosParams& p);

}  // namespace edsforge

#endif  // EDSFORGE_HANKEL_HPP_
