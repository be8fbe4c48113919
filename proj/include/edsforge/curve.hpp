// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Cubic curves y^2 + a*xy + b*y = x^3 + c*x^2 + d*x + e with integer
// coefficients, the chord-and-tangent group law on rational points, and
// division-polynomial value sequences.

#ifndef EDSFORGE_CURVE_HPP_
#define EDSFORGE_CURVE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "edsforge/rational.hpp"

namespace edsforge {

struct Curve {
  Int a, b, c, d, e;

  // Standard quantities of the long Weierstrass form with
  // (a1, a3, a2, a4, a6) = (a, b, c, d, e).
  Int b2() const { return a * a + 4 * c; }
  Int b4() const { return 2 * d + a * b; }
  Int b6() const { return b * b + 4 * e; }
  Int b8() const { return a * a * e + 4 * c * e - a * b * d + c * b * b - d * d; }

  Int discriminant() const;
  bool is_singular() const { return discriminant() == 0; }

  friend bool operator==(const Curve&, const Curve&) = default;
};

// "a,b,c,d" or "a,b,c,d,e"; throws ParseError.
Curve parse_curve(const std::string& text);
std::string to_string(const Curve& curve);
// Human-readable equation, e.g. "y^2 + 2xy + 5y = x^3 + 4x^2 + 9x".
std::string pretty(const Curve& curve);

class Point {
 public:
  Point() = default;  // the point at infinity
  static Point infinity() { return Point(); }
  static Point affine(Rational x, Rational y);

  bool is_infinity() const { return inf_; }
  const Rational& x() const;
  const Rational& y() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  bool inf_ = true;
  Rational x_, y_;
};

std::string to_string(const Point& p);

bool on_curve(const Curve& curve, const Point& p);
// Checked constructor; throws std::invalid_argument when (x, y) is not on the
// curve.
Point point_on(const Curve& curve, const Rational& x, const Rational& y);

// The singular point when the curve is singular and the point is rational.
std::optional<Point> singular_point(const Curve& curve);

Point negate(const Curve& curve, const Point& p);

// Chord-and-tangent addition on the smooth locus. Touching the singular
// point of a singular curve (as operand or result) throws SingularOperation.
Point add(const Curve& curve, const Point& p, const Point& q);

// n*p by repeated addition; n may be negative.
Point multiple(const Curve& curve, const Point& p, long long n);
// Same value through double-and-add.
Point multiple_binary(const Curve& curve, const Point& p, long long n);

// Coordinate change moving the affine point p to the origin. All five new
// coefficients must come out integral; otherwise NonIntegerTranslation.
Curve translate(const Curve& curve, const Point& p);

// psi_0(P), ..., psi_{count-1}(P): division-polynomial values at an affine
// point of a nonsingular curve. Throws SingularOperation on singular curves.
std::vector<Rational> division_sequence(const Curve& curve, const Point& p,
                                        std::size_t count);

}  // namespace edsforge

#endif  // EDSFORGE_CURVE_HPP_
