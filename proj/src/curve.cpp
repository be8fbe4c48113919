// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "edsforge/curve.hpp"

#include <sstream>
#include <stdexcept>

#include "edsforge/errors.hpp"

namespace edsforge {

Int Curve::discriminant() const {
  Int v2 = b2(), v4 = b4(), v6 = b6(), v8 = b8();
  return -v2 * v2 * v8 - 8 * v4 * v4 * v4 - 27 * v6 * v6 + 9 * v2 * v4 * v6;
}

Curve parse_curve(const std::string& text) {
  std::vector<Int> parts;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) parts.push_back(parse_int(piece));
  if (parts.size() == 4) parts.push_back(0);
  if (parts.size() != 5)
    throw ParseError("curve needs 4 or 5 comma-separated integers, got '" +
                     text + "'");
  return Curve{parts[0], parts[1], parts[2], parts[3], parts[4]};
}

std::string to_string(const Curve& curve) {
  std::string out = curve.a.str() + "," + curve.b.str() + "," +
                    curve.c.str() + "," + curve.d.str();
  if (curve.e != 0) out += "," + curve.e.str();
  return out;
}

namespace {

void append_term(std::string& out, const Int& coeff, const std::string& var) {
  if (coeff == 0) return;
  Int magnitude = coeff < 0 ? Int(-coeff) : coeff;
  std::string mag = magnitude.str();
  if (out.empty()) {
    if (coeff < 0) out += "-";
  } else {
    out += coeff < 0 ? " - " : " + ";
  }
  if (mag != "1" || var.empty()) out += mag;
  out += var;
}

}  // namespace

std::string pretty(const Curve& curve) {
  std::string lhs = "y^2";
  append_term(lhs, curve.a, "xy");
  append_term(lhs, curve.b, "y");
  std::string rhs = "x^3";
  append_term(rhs, curve.c, "x^2");
  append_term(rhs, curve.d, "x");
  append_term(rhs, curve.e, "");
  return lhs + " = " + rhs;
}

Point Point::affine(Rational x, Rational y) {
  Point p;
  p.inf_ = false;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

const Rational& Point::x() const {
  if (inf_) throw std::logic_error("coordinate of the point at infinity");
  return x_;
}

const Rational& Point::y() const {
  if (inf_) throw std::logic_error("coordinate of the point at infinity");
  return y_;
}

std::string to_string(const Point& p) {
  if (p.is_infinity()) return "infinity";
  return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

bool on_curve(const Curve& curve, const Point& p) {
  if (p.is_infinity()) return true;
  const Rational& x = p.x();
  const Rational& y = p.y();
  return y * y + Rational(curve.a) * x * y + Rational(curve.b) * y ==
         x * x * x + Rational(curve.c) * x * x + Rational(curve.d) * x +
             Rational(curve.e);
}

Point point_on(const Curve& curve, const Rational& x, const Rational& y) {
  Point p = Point::affine(x, y);
  if (!on_curve(curve, p))
    throw std::invalid_argument("(" + to_string(x) + ", " + to_string(y) +
                                ") is not on " + pretty(curve));
  return p;
}

std::optional<Point> singular_point(const Curve& curve) {
  if (!curve.is_singular()) return std::nullopt;
  // Critical points solve 2y + ax + b = 0 together with
  // 6x^2 + (a^2 + 4c)x + (2d + ab) = 0.
  Int B = curve.a * curve.a + 4 * curve.c;
  Int C = 2 * curve.d + curve.a * curve.b;
  auto root = exact_isqrt(B * B - 24 * C);
  if (!root) return std::nullopt;
  for (int sign : {1, -1}) {
    Rational x(Int(-B + sign * *root), Int(12));
    Rational y = -(Rational(curve.a) * x + Rational(curve.b)) / 2;
    Point p = Point::affine(x, y);
    if (on_curve(curve, p)) return p;
  }
  return std::nullopt;
}

Point negate(const Curve& curve, const Point& p) {
  if (p.is_infinity()) return p;
  return Point::affine(p.x(), -p.y() - Rational(curve.a) * p.x() -
                                  Rational(curve.b));
}

Point add(const Curve& curve, const Point& p, const Point& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  std::optional<Point> node = singular_point(curve);
  if (node && (p == *node || q == *node))
    throw SingularOperation("group law touches the singular point of " +
                            pretty(curve));
  Rational a(curve.a), b(curve.b), c(curve.c), d(curve.d);
  const Rational &x1 = p.x(), &y1 = p.y();
  const Rational &x2 = q.x(), &y2 = q.y();
  if (x1 == x2 && y1 + y2 + a * x2 + b == 0) return Point::infinity();
  Rational lambda;
  if (p == q)
    lambda = (3 * x1 * x1 + 2 * c * x1 + d - a * y1) / (2 * y1 + a * x1 + b);
  else
    lambda = (y2 - y1) / (x2 - x1);
  Rational nu = y1 - lambda * x1;
  Rational x3 = lambda * lambda + a * lambda - c - x1 - x2;
  Rational y3 = -(lambda * x3 + nu) - a * x3 - b;
  Point r = Point::affine(x3, y3);
  if (node && r == *node)
    throw SingularOperation("group law lands on the singular point of " +
                            pretty(curve));
  return r;
}

Point multiple(const Curve& curve, const Point& p, long long n) {
  if (n < 0) return negate(curve, multiple(curve, p, -n));
  Point r = Point::infinity();
  for (long long i = 0; i < n; ++i) r = add(curve, r, p);
  return r;
}

Point multiple_binary(const Curve& curve, const Point& p, long long n) {
  if (n < 0) return negate(curve, multiple_binary(curve, p, -n));
  Point r = Point::infinity();
  Point base = p;
  while (n > 0) {
    if (n & 1) r = add(curve, r, base);
    n >>= 1;
    if (n > 0) base = add(curve, base, base);
  }
  return r;
}

Curve translate(const Curve& curve, const Point& p) {
  if (p.is_infinity())
    throw std::invalid_argument("cannot translate the point at infinity");
  Rational a(curve.a), b(curve.b), c(curve.c), d(curve.d), e(curve.e);
  const Rational &px = p.x(), &py = p.y();
  Rational nb = b + a * px + 2 * py;
  Rational nc = c + 3 * px;
  Rational nd = 3 * px * px + 2 * c * px + d - a * py;
  Rational ne = px * px * px + c * px * px + d * px + e -
                (py * py + a * px * py + b * py);
  for (const Rational& v : {px, py, nb, nc, nd, ne}) {
    if (!is_integer(v))
      throw NonIntegerTranslation("translation of " + to_string(p) +
                                  " leaves non-integer coefficients");
  }
  return Curve{curve.a, numerator(nb), numerator(nc), numerator(nd),
               numerator(ne)};
}

std::vector<Rational> division_sequence(const Curve& curve, const Point& p,
                                        std::size_t count) {
  if (curve.is_singular())
    throw SingularOperation("division values need a nonsingular curve");
  if (p.is_infinity())
    throw std::invalid_argument("division values need an affine point");
  Rational x = p.x(), y = p.y();
  Rational b2(curve.b2()), b4(curve.b4()), b6(curve.b6()), b8(curve.b8());
  std::size_t n = std::max<std::size_t>(count, 5);
  std::vector<Rational> w(n, Rational(0));
  Rational x2 = x * x, x3 = x2 * x;
  if (n > 1) w[1] = 1;
  if (n > 2) w[2] = 2 * y + Rational(curve.a) * x + Rational(curve.b);
  if (n > 3) w[3] = 3 * x2 * x2 + b2 * x3 + 3 * b4 * x2 + 3 * b6 * x + b8;
  if (n > 4) {
    w[4] = w[2] * (2 * x3 * x3 + b2 * x3 * x2 + 5 * b4 * x2 * x2 +
                   10 * b6 * x3 + 10 * b8 * x2 + (b2 * b8 - b4 * b6) * x +
                   (b4 * b8 - b6 * b6));
  }
  for (std::size_t m = 5; m < n; ++m) {
    if (m % 2 == 1) {
      std::size_t k = (m - 1) / 2;
      w[m] = w[k + 2] * w[k] * w[k] * w[k] -
             w[k - 1] * w[k + 1] * w[k + 1] * w[k + 1];
    } else {
      std::size_t k = m / 2;
      if (w[2] == 0) {
        // A 2-torsion point: every even multiple is at infinity.
        w[m] = 0;
      } else {
        w[m] = w[k] *
               (w[k + 2] * w[k - 1] * w[k - 1] - w[k - 2] * w[k + 1] * w[k + 1]) /
               w[2];
      }
    }
  }
  w.resize(count, Rational(0));
  return w;
}

}  // namespace edsforge
