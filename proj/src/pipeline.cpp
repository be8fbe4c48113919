// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "edsforge/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>

#include "edsforge/errors.hpp"

namespace edsforge {

namespace {

void check_pipeline_curve(const Curve& curve, bool allow_singular) {
  if (curve.e != 0)
    throw std::invalid_argument("pipeline curves must have e = 0");
  if (curve.b == 0)
    throw ZeroScaleBase("pipeline needs b != 0 on " + pretty(curve));
  if (!allow_singular && curve.is_singular())
    throw SingularOperation(pretty(curve) + " is singular");
}

}  // namespace

PipelineTrace forward(const Curve& curve, std::size_t depth,
                      bool allow_singular) {
  check_pipeline_curve(curve, allow_singular);
  std::size_t n = 2 * depth + 6;
  Rational a(curve.a), b(curve.b), c(curve.c), d(curve.d);

  PipelineTrace tr;
  tr.curve = curve;

  // (2y + ax + b)^2 = (ax+b)^2 + 4(x^3 + cx^2 + dx).
  Series radicand = Series::poly(
      {b * b, 2 * a * b + 4 * d, a * a + 4 * c, Rational(4)}, n);
  Series root = sqrt(radicand);
  Rational sign = curve.b > 0 ? 1 : -1;
  Series linear = Series::poly({-b, -a}, n);
  tr.branch = (linear - sign * root) * Rational(1, 2);

  std::vector<Rational> scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = tr.branch[i] * rat_pow(b, 2 * (long long)i - 1);
  }
  tr.rescaled = Series(std::move(scaled));
  tr.dropped = drop_prefix(tr.rescaled, 2);

  auto wrap = [n](const Series& inner) {
    std::vector<Rational> den(n, Rational(0));
    den[0] = 1;
    den[1] = -1;
    for (std::size_t i = 0; i + 2 < n && i < inner.order(); ++i) {
      den[i + 2] = -inner[i];
    }
    return inverse(Series(std::move(den)));
  };
  tr.wrapped = wrap(tr.dropped);
  tr.reverted = revert(tr.wrapped);
  tr.g = wrap(tr.reverted);

  if (tr.g.order() < 4 || tr.g[0] != 1 || tr.g[1] != 1 || tr.g[2] != 2 ||
      tr.g[3] != 2) {
    throw BranchResolutionFailed("expected sequence head 1,1,2,2 on " +
                                 pretty(curve));
  }

  tr.a = Sequence{0, tr.g.coeffs()};
  tr.hankel = hankel_data(tr.a.terms, depth, curve.b);
  tr.jfrac = jacobi_from_hankel_partial(tr.hankel.h, tr.hankel.hstar);
  if (tr.hankel.htilde.size() >= 6) tr.somos = somos4_fit(tr.hankel.htilde);
  return tr;
}

ClosedFormCoefficients closed_form_coefficients(const Curve& curve) {
  Int a = curve.a, b = curve.b, c = curve.c, d = curve.d;
  Int d1 = d + 1;
  Int b4 = b * b * b * b;
  ClosedFormCoefficients k;
  k.A = a * a * b * b * d1 * d1 - 2 * a * b * (2 * b4 + b * b * c * d1 - d1 * d1 * d1) +
        b4 * (c * c - 4 * (2 * d + 1)) - 2 * b * b * c * d1 * d1 + d1 * d1 * d1 * d1;
  k.B = 2 * (a * a * b * b * d1 + a * b * (3 * d1 * d1 - b * b * c) -
             2 * (b4 + b * b * c * d1 - d1 * d1 * d1));
  k.C = a * a * b * b + 6 * a * b * d1 - 2 * (b * b * c - 3 * d1 * d1);
  k.D = 2 * (a * b + 2 * d1);
  k.F = -(a * b * d1 + 2 * b4 - b * b * c + d1 * d1);
  k.G = 2 * (b4 - d - 1) - a * b;
  return k;
}

Series closed_form_series(const Curve& curve, std::size_t order) {
  if (curve.b == 0) throw ZeroScaleBase("closed form needs b != 0");
  ClosedFormCoefficients k = closed_form_coefficients(curve);
  std::size_t n = order + 1;
  Series root = sqrt(Series::poly(
      {Rational(1), Rational(k.D), Rational(k.C), Rational(k.B), Rational(k.A)},
      n));
  std::vector<Rational> den = root.coeffs();
  den[0] -= 1;
  den[1] += Rational(k.G);
  den[2] += Rational(k.F);
  Series denominator = drop_prefix(Series(std::move(den)), 1);
  Int b4 = curve.b * curve.b * curve.b * curve.b;
  return Series::poly({Rational(2 * b4)}, order) / denominator;
}

Rational predicted_a4(const Curve& curve) {
  Int a = curve.a, b = curve.b, c = curve.c, d = curve.d;
  return Rational(-a * b * d + b * b * c - d * d + 4);
}

Rational predicted_a5(const Curve& curve) {
  Int a = curve.a, b = curve.b, c = curve.c, d = curve.d;
  return Rational(a * a * b * b * d + a * b * (d * (3 * d + 1) - b * b * c) +
                  b * b * b * b - b * b * c * (2 * d + 1) + 2 * d * d * d +
                  d * d + 4);
}

Rational predicted_htilde2(const Curve& curve) {
  Int a = curve.a, b = curve.b, c = curve.c, d = curve.d;
  return Rational(-a * b * d + b * b * c - d * d);
}

Rational predicted_htilde3(const Curve& curve) {
  Int a = curve.a, b = curve.b, c = curve.c, d = curve.d;
  return Rational(-b * (a * a * b * b * d + a * b * (3 * d * d - b * b * c) +
                        b * b * b * b - 2 * b * b * c * d + 2 * d * d * d));
}

RiordanCoefficients riordan_coefficients(const Curve& curve) {
  Int a = curve.a, b = curve.b, c = curve.c, d = curve.d;
  Int b4 = b * b * b * b;
  RiordanCoefficients r;
  r.alpha = a * b - 2 * (b4 - d - 1);
  r.beta = a * b * (d + 1) + 2 * b4 - b * b * c + (d + 1) * (d + 1);
  r.gamma = a * b * (d + 2) + b4 - b * b * c + d * d + 4 * d + 2;
  r.delta = a * b * d + 2 * b4 - b * b * c + d * d - 2;
  r.epsilon = a * b - b4 + 2 * d + 1;
  return r;
}

Series riordan_series(const Curve& curve, std::size_t order) {
  RiordanCoefficients rc = riordan_coefficients(curve);
  Rational b4 = rat_pow(Rational(curve.b), 4);
  std::size_t n = order + 2;
  Series p = Series::poly({Rational(1), Rational(rc.alpha), Rational(rc.beta)}, n);
  Series q = Series::poly(
      {Rational(1), Rational(rc.epsilon), Rational(rc.delta), Rational(-rc.gamma)},
      n);
  Series wnum = Series::poly({Rational(0), -b4, -b4 * Rational(rc.epsilon),
                              -b4 * Rational(rc.delta), b4 * Rational(rc.gamma)},
                             n);
  Series w = wnum / (p * p);
  // Catalan generating function (1 - sqrt(1-4x)) / (2x).
  Series catalan =
      drop_prefix(Series::one(n + 1) - sqrt(Series::poly({Rational(1), Rational(-4)}, n + 1)), 1) *
      Rational(1, 2);
  Series first = shift_up((Series::poly({b4}, n) / p) * compose(catalan, w), 1);
  Series second = p / q;
  return (first.truncate(n) + second).truncate(order);
}

namespace {

Rational riordan_aux_sum(long long r, const RiordanCoefficients& rc,
                         bool alternating) {
  if (r < 0) return 0;
  Rational total = 0;
  for (long long i = 0; i <= r; ++i) {
    for (long long j = 0; j <= r - i; ++j) {
      long long rij = r - i - j;
      Int c1 = binomial(i, j);
      Int c2 = binomial(j, rij);
      if (c1 == 0 || c2 == 0) continue;
      Rational term = Rational(c1 * c2) *
                      rat_pow(Rational(rc.epsilon), i - j) *
                      rat_pow(Rational(-rc.gamma), rij) *
                      rat_pow(Rational(rc.delta), 2 * j + i - r);
      if (alternating && (i % 2)) term = -term;
      total += term;
    }
  }
  return total;
}

}  // namespace

Rational riordan_term(const Curve& curve, std::size_t n, RiordanFormula which) {
  RiordanCoefficients rc = riordan_coefficients(curve);
  bool use_catalan = which == RiordanFormula::corrected;
  bool alternating = which != RiordanFormula::printed;
  Rational b(curve.b);
  long long nn = (long long)n;
  Rational total = 0;
  for (long long k = 0; k < nn; ++k) {
    Rational ck = use_catalan ? Rational(binomial(2 * k, k), k + 1) : Rational(1);
    for (long long j = 0; j <= k; ++j) {
      for (long long l = 0; l <= j; ++l) {
        for (long long r = 0; r <= l; ++r) {
          long long cap = nn - k - j - r - l;
          for (long long i = 0; i <= cap; ++i) {
            long long m = nn - k - j - l - r - i - 1;
            if (m < 0 || m > i) continue;
            long long ae = 2 * i + r + l + j + k - nn + 1;
            Rational term = ck * rat_pow(b, 4 * k) *
                            Rational(binomial(k, j) * binomial(j, l) *
                                     binomial(l, r) * binomial(2 * k + i, i) *
                                     binomial(i, m)) *
                            rat_pow(Rational(rc.epsilon), j - l) *
                            rat_pow(Rational(-rc.gamma), r) *
                            rat_pow(Rational(rc.delta), l - r) *
                            rat_pow(Rational(rc.beta), m) *
                            rat_pow(Rational(rc.alpha), ae);
            if ((k + i) % 2) term = -term;
            total += term;
          }
        }
      }
    }
  }
  total *= rat_pow(b, 4);
  total += riordan_aux_sum(nn, rc, alternating) +
           Rational(rc.alpha) * riordan_aux_sum(nn - 1, rc, alternating) +
           Rational(rc.beta) * riordan_aux_sum(nn - 2, rc, alternating);
  return total;
}

std::vector<Point> origin_multiples(const Curve& curve, std::size_t count) {
  std::vector<Point> pts;
  pts.reserve(count);
  Point p = point_on(curve, 0, 0);
  Point acc = Point::infinity();
  for (std::size_t k = 1; k <= count; ++k) {
    acc = add(curve, acc, p);
    pts.push_back(acc);
  }
  return pts;
}

Point coords_from_hankel(const Curve& curve, const HankelData& hd,
                         std::size_t n) {
  if (n == 0) return Point::affine(0, 0);
  if (n + 1 >= hd.h.size() || n + 1 >= hd.hstar.size())
    throw InsufficientDepth("coords_from_hankel needs h and h* up to index " +
                            std::to_string(n + 1));
  const auto& h = hd.h;
  const auto& hs = hd.hstar;
  if (h[n] == 0) return Point::infinity();
  if (h[n + 1] == 0)
    throw ZeroHankelPivot("y-coordinate at index " + std::to_string(n) +
                          " needs h_" + std::to_string(n + 1) + " != 0");
  Rational b(curve.b), d(curve.d);
  Rational ratio = h[n - 1] * h[n + 1] / (h[n] * h[n]);
  Rational x = -ratio / (b * b);
  Rational y = x / b * (hs[n + 1] / h[n + 1] - hs[n] / h[n] + d + 1);
  return Point::affine(x, y);
}

PointJacobi jacobi_from_points(const Curve& curve, std::size_t levels) {
  PointJacobi out;
  if (levels == 0) return out;
  out.jf.alphas.push_back(1);
  out.jf.betas.push_back(1);
  if (levels >= 2) {
    out.jf.alphas.push_back(-1);
    out.jf.betas.push_back(1);
  }
  Rational b(curve.b), d(curve.d);
  std::vector<Point> pts = origin_multiples(curve, levels > 0 ? levels - 1 : 0);
  for (std::size_t k = 2; k < levels; ++k) {
    const Point& p = pts[k - 1];  // k * (0,0)
    if (p.is_infinity()) {
      out.stop_level = k;
      out.stop_reason = "point at infinity";
      out.jf.degenerate_at = k;
      break;
    }
    out.jf.betas.push_back(-b * b * p.x());
    if (p.x() == 0) {
      out.stop_level = k;
      out.stop_reason = "zero x-coordinate";
      out.jf.degenerate_at = k;
      break;
    }
    out.jf.alphas.push_back(b * p.y() / p.x() - (d + 1));
  }
  return out;
}

namespace {

Conjecture1Report check_conjecture1(const Curve& curve,
                                    const PipelineTrace& tr,
                                    const std::vector<Rational>& psi) {
  Conjecture1Report rep;
  rep.raw_all = true;
  rep.abs_all = true;
  const auto& ht = tr.hankel.htilde;
  for (std::size_t n = 0; n < ht.size() && n + 1 < psi.size(); ++n) {
    EdsTermCheck term;
    term.n = n;
    term.htilde = ht[n];
    term.psi = psi[n + 1];
    term.raw_match = term.htilde == term.psi;
    term.abs_match =
        boost::multiprecision::abs(term.htilde) == boost::multiprecision::abs(term.psi);
    rep.sign_pattern += term.raw_match ? '+' : (term.abs_match ? '-' : 'x');
    if (!term.raw_match) rep.raw_all = false;
    if (!term.abs_match) {
      rep.abs_all = false;
      if (!rep.first_abs_mismatch) rep.first_abs_mismatch = n;
    }
    rep.terms.push_back(std::move(term));
  }
  Int a = curve.a, b = curve.b, c = curve.c, d = curve.d;
  rep.expected = SomosParams{Rational(b * b),
                             Rational(a * b * d - b * b * c + d * d)};
  rep.fitted = tr.somos.params;
  SomosCheck check = somos4_verify(ht, rep.expected);
  rep.windows = check.windows;
  rep.first_window_failure = check.first_failure;
  rep.fit_matches = tr.somos.params ? *tr.somos.params == rep.expected
                                    : tr.somos.underdetermined;
  rep.pass = rep.abs_all && check.ok() && rep.fit_matches;
  return rep;
}

Conjecture2Report check_conjecture2(const Curve& curve,
                                    const PipelineTrace& tr,
                                    const std::vector<Point>& pts,
                                    std::size_t depth) {
  Conjecture2Report rep;
  rep.pass = true;
  const auto& h = tr.hankel.h;
  const auto& hs = tr.hankel.hstar;
  Rational b(curve.b), d(curve.d);
  for (std::size_t n = 1; n + 1 < depth; ++n) {
    CoordCheck cc;
    cc.n = n;
    const Point& oracle = pts[n];  // (n+1) * (0,0)
    if (!oracle.is_infinity()) {
      cc.oracle_x = oracle.x();
      cc.oracle_y = oracle.y();
    }
    if (h[n] == 0) {
      cc.status = oracle.is_infinity() ? "infinity" : "mismatch";
    } else if (oracle.is_infinity()) {
      cc.status = "mismatch";
    } else {
      Rational ratio = h[n - 1] * h[n + 1] / (h[n] * h[n]);
      Rational x = -ratio / (b * b);
      cc.x = x;
      if (h[n + 1] == 0) {
        cc.status = x == oracle.x() ? "partial" : "mismatch";
      } else {
        Rational y = x / b * (hs[n + 1] / h[n + 1] - hs[n] / h[n] + d + 1);
        cc.y = y;
        cc.status = (x == oracle.x() && y == oracle.y()) ? "match" : "mismatch";
      }
    }
    if (cc.status == "mismatch") {
      rep.pass = false;
      if (!rep.first_mismatch) rep.first_mismatch = n;
    }
    rep.points.push_back(std::move(cc));
  }
  return rep;
}

Conjecture3Report check_conjecture3(const PipelineTrace& tr,
                                    const PointJacobi& pj) {
  Conjecture3Report rep;
  rep.alphas_hankel = tr.jfrac.alphas;
  rep.betas_hankel = tr.jfrac.betas;
  rep.alphas_point = pj.jf.alphas;
  rep.betas_point = pj.jf.betas;
  rep.hankel_stop = tr.jfrac.degenerate_at;
  rep.point_stop = pj.stop_level;
  rep.stop_reason = pj.stop_reason;
  rep.degenerate = rep.hankel_stop || rep.point_stop;

  rep.prefix_match = true;
  std::size_t an = std::min(rep.alphas_hankel.size(), rep.alphas_point.size());
  for (std::size_t i = 0; i < an; ++i) {
    if (rep.alphas_hankel[i] != rep.alphas_point[i]) rep.prefix_match = false;
  }
  std::size_t bn = std::min(rep.betas_hankel.size(), rep.betas_point.size());
  for (std::size_t i = 0; i < bn; ++i) {
    if (rep.betas_hankel[i] != rep.betas_point[i]) rep.prefix_match = false;
  }

  Series expansion = series_from_jacobi(
      pj.jf, std::min<std::size_t>(2 * pj.jf.alphas.size(), tr.a.terms.size()));
  rep.series_compared = expansion.order();
  rep.series_matched = 0;
  for (std::size_t i = 0; i < expansion.order(); ++i) {
    if (expansion[i] == tr.a.terms[i]) {
      ++rep.series_matched;
    } else {
      if (!rep.first_mismatch) rep.first_mismatch = i;
      break;
    }
  }
  bool series_ok = rep.series_matched == rep.series_compared;
  if (rep.degenerate) {
    // Both routes must stop at the same level with agreeing prefixes.
    rep.pass = rep.prefix_match && series_ok &&
               rep.hankel_stop == rep.point_stop;
  } else {
    rep.pass = rep.prefix_match && series_ok &&
               rep.alphas_hankel.size() == rep.alphas_point.size();
  }
  return rep;
}

}  // namespace

CurveReport verify_conjectures(const Curve& curve, std::size_t depth) {
  check_pipeline_curve(curve, /*allow_singular=*/false);
  if (depth < 3)
    throw std::invalid_argument("verification needs depth >= 3");
  CurveReport rep;
  rep.curve = curve;
  rep.discriminant = curve.discriminant();
  rep.depth = depth;

  PipelineTrace tr = forward(curve, depth);
  rep.a_head = head(tr.a.terms, std::min<std::size_t>(tr.a.terms.size(), 12));
  std::vector<Rational> psi =
      division_sequence(curve, point_on(curve, 0, 0), depth + 2);
  std::vector<Point> pts = origin_multiples(curve, depth + 1);
  PointJacobi pj = jacobi_from_points(curve, depth);

  rep.conjecture1 = check_conjecture1(curve, tr, psi);
  rep.conjecture2 = check_conjecture2(curve, tr, pts, depth);
  rep.conjecture3 = check_conjecture3(tr, pj);
  rep.pass = rep.conjecture1.pass && rep.conjecture2.pass &&
             rep.conjecture3.pass;
  return rep;
}

namespace {

// Uniform in [lo, hi] by rejection; identical on every platform for a fixed
// generator state, unlike std::uniform_int_distribution.
long long bounded_uniform(std::mt19937_64& rng, long long lo, long long hi) {
  std::uint64_t range = (std::uint64_t)(hi - lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + (long long)(r % range);
}

// a, c, d uniform in [-bound, bound]; b uniform in [1, bound] so the Hankel
// rescaling base is always valid; singular draws rejected.
Curve sample_curve(std::mt19937_64& rng, long long bound) {
  while (true) {
    Curve c{bounded_uniform(rng, -bound, bound),
            bounded_uniform(rng, 1, bound),
            bounded_uniform(rng, -bound, bound),
            bounded_uniform(rng, -bound, bound), 0};
    if (c.is_singular()) continue;
    return c;
  }
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  SweepReport rep;
  rep.seed = config.seed;
  rep.bound = config.bound;
  rep.depth = config.depth;

  std::mt19937_64 rng(config.seed);
  std::vector<Curve> curves;
  curves.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i)
    curves.push_back(sample_curve(rng, config.bound));

  unsigned workers = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  rep.curves.resize(curves.size());
  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= curves.size()) return;
      rep.curves[i] = verify_conjectures(curves[i], config.depth);
    }
  };
  std::vector<std::future<void>> futures;
  for (unsigned w = 1; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, run));
  run();
  for (auto& f : futures) f.get();

  for (const auto& r : rep.curves) (r.pass ? rep.passed : rep.failed)++;
  rep.pass = rep.failed == 0;
  return rep;
}

}  // namespace edsforge
