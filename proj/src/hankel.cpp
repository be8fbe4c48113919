// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "edsforge/hankel.hpp"

#include <stdexcept>
#include <utility>

#include "edsforge/errors.hpp"

namespace edsforge {

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational determinant(const std::vector<std::vector<Rational>>& m) {
  std::size_t n = m.size();
  std::vector<std::vector<Int>> im(n, std::vector<Int>(n));
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("matrix is not square");
    Int l = 1;
    for (const Rational& v : m[i]) l = boost::multiprecision::lcm(l, denominator(v));
    for (std::size_t j = 0; j < n; ++j) {
      im[i][j] = numerator(m[i][j]) * (l / denominator(m[i][j]));
    }
    scale *= l;
  }
  return Rational(bareiss_determinant(std::move(im)), scale);
}

namespace {

Rational hankel_det(const std::vector<Rational>& a, std::size_t size,
                    bool shift_last_row) {
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size));
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t base = (shift_last_row && i + 1 == size) ? i + 1 : i;
    for (std::size_t j = 0; j < size; ++j) m[i][j] = a[base + j];
  }
  return determinant(m);
}

}  // namespace

std::vector<Rational> hankel_transform(const std::vector<Rational>& a,
                                       std::size_t count) {
  if (count > 0 && a.size() < 2 * count - 1)
    throw InsufficientTerms("hankel_transform: need " +
                            std::to_string(2 * count - 1) + " terms, have " +
                            std::to_string(a.size()));
  std::vector<Rational> h(count);
  for (std::size_t n = 0; n < count; ++n) h[n] = hankel_det(a, n + 1, false);
  return h;
}

std::vector<Rational> modified_hankel_transform(const std::vector<Rational>& a,
                                                std::size_t count) {
  if (a.size() < 2 * count)
    throw InsufficientTerms("modified_hankel_transform: need " +
                            std::to_string(2 * count) + " terms, have " +
                            std::to_string(a.size()));
  std::vector<Rational> h(count);
  for (std::size_t n = 0; n < count; ++n) h[n] = hankel_det(a, n + 1, true);
  return h;
}

std::vector<Rational> rescale_hankel(const std::vector<Rational>& h,
                                     const Int& base) {
  if (base == 0) throw ZeroScaleBase("rescale_hankel: zero base");
  std::vector<Rational> out(h.size());
  for (std::size_t n = 0; n < h.size(); ++n) {
    long long e = (long long)n * (long long)n - 2 * (long long)n;
    out[n] = h[n] * rat_pow(Rational(base), -e);
  }
  return out;
}

HankelData hankel_data(const std::vector<Rational>& a, std::size_t count,
                       const Int& base) {
  HankelData hd;
  hd.h = hankel_transform(a, count);
  hd.hstar = modified_hankel_transform(a, count);
  hd.htilde = rescale_hankel(hd.h, base);
  return hd;
}

namespace {

JacobiFraction jacobi_series_impl(const Series& g, bool partial) {
  if (g.order() == 0 || g[0] != 1)
    throw std::invalid_argument("jacobi_from_series: series must start with 1");
  JacobiFraction jf;
  jf.betas.push_back(1);
  Series G = g;
  while (G.order() >= 2) {
    Series q = Series::one(G.order()) - inverse(G);
    jf.alphas.push_back(q[1]);
    if (G.order() < 3) break;
    std::vector<Rational> r = q.coeffs();
    r[1] = 0;
    Series rest(std::move(r));
    if (rest.is_zero()) {
      jf.terminated = true;
      break;
    }
    Rational beta = rest[2];
    jf.betas.push_back(beta);
    if (beta == 0) {
      // The continued fraction cannot be continued past this level.
      if (!partial)
        throw ZeroHankelPivot("vanishing beta at level " +
                              std::to_string(jf.alphas.size()));
      jf.degenerate_at = jf.alphas.size();
      break;
    }
    G = drop_prefix(rest, 2) * (Rational(1) / beta);
  }
  return jf;
}

JacobiFraction jacobi_hankel_impl(const std::vector<Rational>& h,
                                  const std::vector<Rational>& hstar,
                                  bool partial) {
  std::size_t levels = std::min(h.size(), hstar.size());
  if (levels == 0)
    throw std::invalid_argument("jacobi_from_hankel: empty input");
  JacobiFraction jf;
  auto at = [&h](std::size_t n, long long off) -> Rational {
    long long i = (long long)n + off;
    return i < 0 ? Rational(1) : h[(std::size_t)i];
  };
  for (std::size_t n = 0; n < levels; ++n) {
    if (n > 0) {
      // beta_n = h_{n-2} h_n / h_{n-1}^2, with h_{-1} = 1.
      jf.betas.push_back(at(n, -2) * h[n] / (h[n - 1] * h[n - 1]));
    } else {
      jf.betas.push_back(1);
    }
    if (h[n] == 0) {
      if (!partial)
        throw ZeroHankelPivot("h_" + std::to_string(n) + " = 0");
      jf.degenerate_at = n;
      break;
    }
    Rational alpha = hstar[n] / h[n];
    if (n > 0) alpha -= hstar[n - 1] / h[n - 1];
    jf.alphas.push_back(alpha);
  }
  return jf;
}

}  // namespace

JacobiFraction jacobi_from_series(const Series& g) {
  return jacobi_series_impl(g, false);
}

JacobiFraction jacobi_from_series_partial(const Series& g) {
  return jacobi_series_impl(g, true);
}

JacobiFraction jacobi_from_hankel(const std::vector<Rational>& h,
                                  const std::vector<Rational>& hstar) {
  return jacobi_hankel_impl(h, hstar, false);
}

JacobiFraction jacobi_from_hankel_partial(const std::vector<Rational>& h,
                                          const std::vector<Rational>& hstar) {
  return jacobi_hankel_impl(h, hstar, true);
}

Series series_from_jacobi(const JacobiFraction& jf, std::size_t n) {
  std::size_t levels = jf.alphas.size();
  if (levels == 0)
    throw std::invalid_argument("series_from_jacobi: no levels");
  if (!jf.terminated && n > 2 * levels)
    throw InsufficientDepth("requested " + std::to_string(n) +
                            " coefficients from " + std::to_string(levels) +
                            " levels");
  Series num = Series::poly({Rational(1)}, n);
  Series den = Series::poly({Rational(1), -jf.alphas[levels - 1]}, n);
  for (std::size_t k = levels - 1; k-- > 0;) {
    Rational beta = k + 1 < jf.betas.size() ? jf.betas[k + 1] : Rational(0);
    Series level = Series::poly({Rational(1), -jf.alphas[k]}, n);
    Series next = level * den - beta * shift_up(num, 2).truncate(n);
    num = den;
    den = next;
  }
  return num / den;
}

SomosFit somos4_fit(const std::vector<Rational>& h) {
  if (h.size() < 6)
    throw InsufficientTerms("somos4_fit needs at least 6 terms");
  // Window n: h_n h_{n-4} = s * (h_{n-1} h_{n-3}) + t * h_{n-2}^2.
  struct Window { Rational a, b, c; };
  std::vector<Window> rows;
  for (std::size_t n = 4; n < h.size(); ++n) {
    rows.push_back({h[n - 1] * h[n - 3], h[n - 2] * h[n - 2], h[n] * h[n - 4]});
  }
  SomosFit fit;
  fit.windows = rows.size();
  for (std::size_t i = 0; i < rows.size() && !fit.params; ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      Rational det = rows[i].a * rows[j].b - rows[j].a * rows[i].b;
      if (det == 0) continue;
      Rational s = (rows[i].c * rows[j].b - rows[j].c * rows[i].b) / det;
      Rational t = (rows[i].a * rows[j].c - rows[j].a * rows[i].c) / det;
      fit.params = SomosParams{s, t};
      break;
    }
  }
  if (!fit.params) {
    fit.underdetermined = true;
    return fit;
  }
  for (std::size_t w = 0; w < rows.size(); ++w) {
    if (rows[w].c != fit.params->s * rows[w].a + fit.params->t * rows[w].b) {
      fit.first_violation = w + 4;
      break;
    }
  }
  return fit;
}

SomosCheck somos4_verify(const std::vector<Rational>& h, const SomosParams& p) {
  SomosCheck check;
  for (std::size_t n = 4; n < h.size(); ++n) {
    ++check.windows;
    Rational lhs = h[n] * h[n - 4];
    Rational rhs = p.s * h[n - 1] * h[n - 3] + p.t * h[n - 2] * h[n - 2];
    if (lhs != rhs && !check.first_failure) check.first_failure = n;
  }
  return check;
}

}  // namespace edsforge
