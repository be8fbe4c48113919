// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "edsforge/series.hpp"

#include <algorithm>

#include "edsforge/errors.hpp"
#include "edsforge/sequence.hpp"

namespace edsforge {

Series Series::zero(std::size_t order) {
  return Series(std::vector<Rational>(order, Rational(0)));
}

Series Series::one(std::size_t order) {
  return poly({Rational(1)}, order);
}

Series Series::poly(std::vector<Rational> low, std::size_t order) {
  low.resize(order, Rational(0));
  return Series(std::move(low));
}

Series Series::truncate(std::size_t n) const {
  if (n > order()) throw InsufficientTerms("truncate beyond order");
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + n));
}

std::vector<Rational> Series::head(std::size_t n) const {
  if (n > order()) throw InsufficientTerms("head beyond order");
  return std::vector<Rational>(c_.begin(), c_.begin() + n);
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& v) { return v == 0; });
}

Series operator-(const Series& s) {
  std::vector<Rational> r(s.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -s[i];
  return Series(std::move(r));
}

Series operator+(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = a[i] + b[i];
  return Series(std::move(r));
}

Series operator-(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = a[i] - b[i];
  return Series(std::move(r));
}

Series operator*(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> r(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return Series(std::move(r));
}

Series operator*(const Series& a, const Rational& k) {
  std::vector<Rational> r(a.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] * k;
  return Series(std::move(r));
}

Series operator*(const Rational& k, const Series& a) { return a * k; }

Series operator/(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  if (n == 0) return Series::zero(0);
  if (b[0] == 0) throw DivisionByZeroSeries("series division by zero constant term");
  std::vector<Rational> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = a[k];
    for (std::size_t j = 0; j < k; ++j) acc -= q[j] * b[k - j];
    q[k] = acc / b[0];
  }
  return Series(std::move(q));
}

Series inverse(const Series& s) { return Series::one(s.order()) / s; }

Series sqrt(const Series& s) {
  std::size_t n = s.order();
  if (n == 0) return Series::zero(0);
  if (s[0] == 0) throw NonSquareConstantTerm("sqrt of series with zero constant term");
  auto root = exact_sqrt(s[0]);
  if (!root)
    throw NonSquareConstantTerm("constant term " + to_string(s[0]) +
                                " is not a rational square");
  std::vector<Rational> t(n);
  t[0] = *root;
  Rational twice = 2 * t[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = s[k];
    for (std::size_t j = 1; j < k; ++j) acc -= t[j] * t[k - j];
    t[k] = acc / twice;
  }
  return Series(std::move(t));
}

Series compose(const Series& f, const Series& g) {
  std::size_t n = std::min(f.order(), g.order());
  if (n == 0) return Series::zero(0);
  if (g[0] != 0)
    throw CompositionConstantTerm("inner series must have zero constant term");
  Series gt = g.truncate(n);
  Series r = Series::zero(n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * gt;
    std::vector<Rational> c = r.coeffs();
    c[0] += f[k];
    r = Series(std::move(c));
  }
  return r;
}

Series revert(const Series& g) {
  std::size_t n = g.order();
  if (n == 0) return Series::zero(0);
  if (g[0] == 0) throw RevertConstantTerm("revert needs a nonzero constant term");
  Series ginv = inverse(g);
  Series p = ginv;
  std::vector<Rational> out(n);
  out[0] = p[0];
  for (std::size_t k = 1; k < n; ++k) {
    p = p * ginv;
    out[k] = p[k] / Rational(k + 1);
  }
  return Series(std::move(out));
}

Series compositional_inverse(const Series& f) {
  std::size_t n = f.order();
  if (n == 0) return Series::zero(0);
  if (f[0] != 0 || n < 2 || f[1] == 0)
    throw RevertConstantTerm(
        "compositional inverse needs f(0) = 0 and f'(0) != 0");
  std::vector<Rational> v(n, Rational(0));
  v[1] = Rational(1) / f[1];
  for (std::size_t k = 2; k < n; ++k) {
    Series trial = compose(f.truncate(k + 1), Series::poly(
        std::vector<Rational>(v.begin(), v.begin() + k), k + 1));
    v[k] = -trial[k] / f[1];
  }
  return Series(std::move(v));
}

namespace {

// 1/(1 - r x) to the given order.
Series geometric(const Rational& r, std::size_t order) {
  std::vector<Rational> c(order);
  Rational p = 1;
  for (std::size_t i = 0; i < order; ++i) {
    c[i] = p;
    p *= r;
  }
  return Series(std::move(c));
}

}  // namespace

Series binomial_transform(const Series& g, const Rational& r) {
  std::size_t n = g.order();
  Series pre = geometric(r, n);
  Series inner = shift_up(pre, 1).truncate(n);  // x/(1-rx)
  return pre * compose(g, inner);
}

Series invert_transform(const Series& g, const Rational& r) {
  std::size_t n = g.order();
  Series den = Series::one(n) - (r * shift_up(g, 1).truncate(n));
  return g / den;
}

Series drop_prefix(const Series& g, std::size_t k) {
  if (k > g.order())
    throw PrefixTooLong("cannot drop " + std::to_string(k) +
                        " terms from a series of order " +
                        std::to_string(g.order()));
  return Series(std::vector<Rational>(g.coeffs().begin() + k,
                                      g.coeffs().end()));
}

Series shift_up(const Series& g, std::size_t k) {
  std::vector<Rational> c(g.order() + k, Rational(0));
  std::copy(g.coeffs().begin(), g.coeffs().end(), c.begin() + k);
  return Series(std::move(c));
}

Sequence bisect(const Sequence& s, int parity) {
  if (parity != 0 && parity != 1)
    throw Error("bisect parity must be 0 or 1");
  Sequence out;
  bool first = true;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    long long abs_index = s.offset + (long long)i;
    long long mod = ((abs_index % 2) + 2) % 2;
    if (mod != parity) continue;
    if (first) {
      out.offset = (abs_index - parity) / 2;
      first = false;
    }
    out.terms.push_back(s.terms[i]);
  }
  return out;
}

std::vector<Rational> head(const std::vector<Rational>& v, std::size_t n) {
  if (n > v.size()) throw InsufficientTerms("head beyond available terms");
  return std::vector<Rational>(v.begin(), v.begin() + n);
}

}  // namespace edsforge
