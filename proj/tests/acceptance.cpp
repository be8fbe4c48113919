// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance harness: one line of output per criterion, exit 0 only when
// every criterion passes. Each criterion is independent; a throw inside one
// marks it failed and the rest still run.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edsforge/curve.hpp"
#include "edsforge/errors.hpp"
#include "edsforge/hankel.hpp"
#include "edsforge/oeis.hpp"
#include "edsforge/pipeline.hpp"
#include "edsforge/report.hpp"
#include "edsforge/series.hpp"
#include "test_util.hpp"

using namespace edsforge;
using testutil::draw;

namespace {

int failures = 0;
std::vector<std::string> info_lines;

void info(const std::string& line) { info_lines.push_back(line); }

void criterion(int number, const std::string& name,
               const std::function<bool()>& body) {
  info_lines.clear();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << name << "\n";
  for (const auto& line : info_lines) std::cout << "       " << line << "\n";
  if (!ok && !error.empty()) std::cout << "       threw: " << error << "\n";
  if (!ok) ++failures;
}

bool expect(bool ok, const std::string& what) {
  if (!ok) info("failed: " + what);
  return ok;
}

std::vector<Rational> rat(const std::vector<long long>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

const Curve kReference{2, 5, 4, 9, 0};

// The shared random curve battery. Deliberately sampled here rather than
// through sweep() so the acceptance run does not depend on the library's own
// sampling code.
std::vector<Curve> battery() {
  std::vector<Curve> curves{kReference};
  std::mt19937_64 rng(20260823);
  while (curves.size() < 51) {
    Curve c{draw(rng, -4, 4), draw(rng, 1, 4), draw(rng, -4, 4),
            draw(rng, -4, 4), 0};
    if (!c.is_singular()) curves.push_back(c);
  }
  return curves;
}

// Naive cofactor expansion, the independent determinant oracle.
Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational det(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Rational term = m[0][j] * cofactor_determinant(minor);
    if (j % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}

Series series_from_record(const OeisRecord& rec) {
  std::vector<Rational> v(rec.terms.begin(), rec.terms.end());
  return Series(std::move(v));
}

bool criterion1() {
  PipelineTrace tr = forward(kReference, 8);
  bool ok = expect(head(tr.a.terms, 8) ==
                       rat({1, 1, 2, 2, -67, 2688, -73696, 1856194}),
                   "sequence head");
  ok = expect(head(tr.hankel.htilde, 6) ==
                  rat({1, 5, -71, -13065, -1275214, 2876558965LL}),
              "scaled Hankel head") &&
       ok;
  SomosFit fit = somos4_fit(tr.hankel.htilde);
  ok = expect(fit.params && fit.params->s == 25 && fit.params->t == 71 &&
                  fit.consistent(),
              "somos fit (25, 71)") &&
       ok;
  return ok;
}

bool criterion2(const std::vector<CurveReport>& reports) {
  bool ok = true;
  std::size_t raw = 0;
  for (const auto& rep : reports) {
    ok = expect(rep.conjecture1.abs_all,
                "scaled Hankel vs division values on " + to_string(rep.curve)) &&
         ok;
    if (rep.conjecture1.raw_all) ++raw;
  }
  info("sign pattern on " + to_string(kReference) + ": " +
       reports.front().conjecture1.sign_pattern);
  std::ostringstream agg;
  agg << raw << "/" << reports.size() << " curves match including signs"
      << (raw == reports.size() ? "" : "; the rest match up to sign");
  info(agg.str());
  return ok;
}

bool criterion3(const std::vector<CurveReport>& reports) {
  bool ok = true;
  for (const auto& rep : reports)
    ok = expect(rep.conjecture2.pass,
                "coordinates vs group law on " + to_string(rep.curve)) &&
         ok;
  PipelineTrace tr = forward(kReference, 8);
  Point two = coords_from_hankel(kReference, tr.hankel, 1);
  ok = expect(two == Point::affine(Rational(71, 25), Rational(-1974, 125)),
              "2P spot value (71/25, -1974/125)") &&
       ok;
  ok = expect(two == multiple(kReference, point_on(kReference, 0, 0), 2),
              "2P spot value vs group law") &&
       ok;
  return ok;
}

bool criterion4(const std::vector<CurveReport>& reports) {
  bool ok = true;
  for (const auto& rep : reports) {
    ok = expect(rep.conjecture3.pass,
                "continued-fraction routes on " + to_string(rep.curve)) &&
         ok;
    if (!rep.conjecture3.degenerate)
      ok = expect(rep.conjecture3.series_compared >= 10 &&
                      rep.conjecture3.series_matched ==
                          rep.conjecture3.series_compared,
                  "series reproduction on " + to_string(rep.curve)) &&
           ok;
  }
  const Conjecture3Report& ref = reports.front().conjecture3;
  ok = expect(ref.alphas_point[0] == 1 && ref.alphas_point[1] == -1 &&
                  ref.betas_point[2] == -71,
              "spot values alpha0=1, alpha1=-1, beta2=-71") &&
       ok;
  return ok;
}

bool criterion5(const std::vector<Curve>& curves) {
  ClosedFormCoefficients k = closed_form_coefficients(kReference);
  bool ok = expect(
      k == ClosedFormCoefficients{-62500, 3500, 1100, 60, -1350, 1220},
      "radicand coefficients on the reference curve");
  for (const Curve& curve : curves) {
    PipelineTrace tr = forward(curve, 8);
    ok = expect(closed_form_series(curve, tr.g.order()) == tr.g,
                "closed form vs pipeline on " + to_string(curve)) &&
         ok;
    ok = expect(tr.a.terms[4] == predicted_a4(curve) &&
                    tr.a.terms[5] == predicted_a5(curve) &&
                    tr.hankel.htilde[2] == predicted_htilde2(curve) &&
                    tr.hankel.htilde[3] == predicted_htilde3(curve),
                "leading-coefficient formulas on " + to_string(curve)) &&
         ok;
  }
  return ok;
}

bool criterion6() {
  PipelineTrace fib = forward(Curve{1, 1, -2, 0, 0}, 8, true);
  bool ok = expect(head(fib.a.terms, 11) ==
                       rat({1, 1, 2, 2, 2, 9, -7, 25, 19, -125, 474}),
                   "first singular fixture sequence head");
  ok = expect(fib.hankel.htilde == rat({1, 1, -2, -3, 5, 8, -13, -21}),
              "signed Fibonacci scaled Hankel") &&
       ok;
  SomosFit ffit = somos4_fit(fib.hankel.htilde);
  ok = expect(ffit.params && ffit.params->s == 1 && ffit.params->t == 2,
              "Fibonacci fit (1, 2)") &&
       ok;

  PipelineTrace pell = forward(Curve{0, 2, -1, -1, 0}, 8, true);
  ok = expect(head(pell.a.terms, 11) ==
                  rat({1, 1, 2, 2, -1, 15, 8, -152, 493, 541, -8898}),
              "second singular fixture sequence head") &&
       ok;
  ok = expect(pell.hankel.htilde == rat({1, 2, -5, -12, 29, 70, -169, -408}),
              "signed Pell scaled Hankel") &&
       ok;
  SomosFit pfit = somos4_fit(pell.hankel.htilde);
  ok = expect(pfit.params && pfit.params->s == 4 && pfit.params->t == 5,
              "Pell fit (4, 5)") &&
       ok;

  bool threw = false;
  try {
    forward(Curve{0, 0, 1, 0, 0}, 8);
  } catch (const ZeroScaleBase&) {
    threw = true;
  }
  ok = expect(threw, "b = 0 curve raises a hard error") && ok;
  return ok;
}

bool criterion7(const std::vector<Curve>& curves) {
  bool all_agree = true;
  std::size_t tested = 0;
  for (const Curve& curve : curves) {
    if (tested >= 20) break;
    ++tested;
    PipelineTrace tr = forward(curve, 8);
    for (std::size_t n = 0; n <= 10; ++n) {
      Rational formula = riordan_term(curve, n);
      if (formula != tr.a.terms[n]) {
        all_agree = false;
        info("formula diverges on " + to_string(curve) + " at n=" +
             std::to_string(n) + ": formula " + to_string(formula) +
             ", pipeline " + to_string(tr.a.terms[n]));
        break;
      }
    }
  }
  if (all_agree)
    info("corrected formula matches the pipeline for n <= 10 on " +
         std::to_string(tested) + " curves");

  // The two uncorrected variants are kept observable; record where each
  // first leaves the pipeline values on the reference curve.
  PipelineTrace ref = forward(kReference, 8);
  for (auto which : {RiordanFormula::printed, RiordanFormula::half_corrected}) {
    const char* label =
        which == RiordanFormula::printed ? "as-printed" : "sign-only repair";
    bool noted = false;
    for (std::size_t n = 0; n <= 10 && !noted; ++n) {
      Rational v = riordan_term(kReference, n, which);
      if (v != ref.a.terms[n]) {
        info(std::string(label) + " variant first differs at n=" +
             std::to_string(n) + ": " + to_string(v) + " vs " +
             to_string(ref.a.terms[n]));
        noted = true;
      }
    }
    if (!noted) info(std::string(label) + " variant matches through n=10");
  }
  // Documented-finding mode: a pinpointed divergence with both values also
  // completes the criterion; only a crash fails it.
  return true;
}

bool criterion8() {
  std::size_t n = 24;
  // 2 / (1 + 2x + x^2 + sqrt(1 - 4x + 6x^2 + x^4)).
  Series root = sqrt(Series::poly(
      {Rational(1), Rational(-4), Rational(6), Rational(0), Rational(1)}, n));
  Series g0 = Series::poly({Rational(2)}, n) /
              (Series::poly({Rational(1), Rational(2), Rational(1)}, n) + root);
  bool ok = expect(
      hankel_transform(g0.coeffs(), 12) ==
          rat({1, -1, 1, 2, -1, -3, -5, 7, -4, -23, 29, 59}),
      "Hankel transform of the quartic-root expansion");

  // g1 = 1/(1 - x - x^2 g0), also given in closed form.
  Series one = Series::one(n);
  Series x = Series::poly({Rational(0), Rational(1)}, n);
  Series x2 = Series::poly({Rational(0), Rational(0), Rational(1)}, n);
  Series g1 = one / (one - x - x2 * g0);
  Series g1_closed =
      (Series::poly({Rational(4), Rational(-5), Rational(0), Rational(-3)}, n) -
       x * root) /
      (Rational(2) *
       Series::poly({Rational(2), Rational(-5), Rational(2), Rational(0),
                     Rational(2)},
                    n));
  ok = expect(g1 == g1_closed, "wrapped form equals its closed form") && ok;
  ok = expect(g1.head(15) == rat({1, 1, 2, 3, 4, 5, 5, 3, -1, -3, 12, 79, 253,
                                  565, 858}),
              "expansion head of the wrapped form") &&
       ok;

  // Same Hankel transform shifted by the extra leading 1.
  std::vector<Rational> hg1 = hankel_transform(g1.coeffs(), 12);
  ok = expect(hg1 == rat({1, 1, -1, 1, 2, -1, -3, -5, 7, -4, -23, 29}),
              "Hankel transform of the wrapped form") &&
       ok;

  // Alphas of this g1 and of the pipeline g for y^2 + y = x^3 - x sum to
  // 2, -1, 1, 1, 1, ... while the betas coincide.
  PipelineTrace ed = forward(Curve{0, 1, 0, -1, 0}, 10);
  JacobiFraction jg = jacobi_from_series_partial(ed.g);
  JacobiFraction j1 = jacobi_from_series_partial(g1);
  std::size_t levels = std::min(jg.alphas.size(), j1.alphas.size());
  ok = expect(levels >= 8, "both continued fractions reach 8 levels") && ok;
  levels = std::min<std::size_t>(levels, 10);
  std::vector<Rational> sum;
  for (std::size_t i = 0; i < levels; ++i)
    sum.push_back(jg.alphas[i] + j1.alphas[i]);
  std::vector<Rational> want{2, -1};
  while (want.size() < levels) want.push_back(Rational(1));
  ok = expect(sum == want, "alpha sequences sum to 2, -1, 1, 1, ...") && ok;
  for (std::size_t i = 0; i < levels; ++i)
    ok = expect(jg.betas[i] == j1.betas[i],
                "beta sequences coincide at level " + std::to_string(i)) &&
         ok;

  // INVERT(-3) of the 4th binomial transform carries the bundled quartic
  // sequence onto the reversion stage of y^2 + xy - y = x^3 + 3x^2 + 2x.
  OeisClient client(true);
  Series fix = series_from_record(client.fetch("A178078"));
  Series mapped = invert_transform(binomial_transform(fix, Rational(4)),
                                   Rational(-3));
  PipelineTrace tw = forward(Curve{1, -1, 3, 2, 0}, 12);
  std::size_t compare = std::min<std::size_t>(mapped.order(), 14);
  ok = expect(compare >= 12, "identity compared on at least 12 terms") && ok;
  ok = expect(mapped.head(compare) == tw.reverted.head(compare),
              "invert-binomial identity onto the reversion stage") &&
       ok;
  ok = expect(hankel_transform(fix.coeffs(), 8) ==
                  rat({1, 1, 2, 1, -3, -7, -8, -25}),
              "Hankel transform of the bundled quartic sequence") &&
       ok;
  return ok;
}

bool criterion9() {
  PipelineTrace tr = forward(Curve{0, 1, 0, -1, 0}, 12);
  bool ok = expect(tr.dropped.head(9) ==
                       rat({1, 1, 3, 8, 23, 68, 207, 644, 2040}),
                   "dropped-stage head");
  ok = expect(hankel_transform(tr.dropped.coeffs(), 8) ==
                  rat({1, 2, 3, 7, 23, 59, 314, 1529}),
              "dropped-stage Hankel transform") &&
       ok;
  ok = expect(tr.wrapped.head(11) ==
                  rat({1, 1, 2, 4, 10, 27, 78, 234, 722, 2274, 7280}),
              "wrapped-stage head") &&
       ok;
  ok = expect(hankel_transform(tr.wrapped.coeffs(), 7) ==
                  rat({1, 1, 2, 3, 7, 23, 59}),
              "wrapped-stage Hankel transform") &&
       ok;
  ok = expect(tr.reverted.head(14) ==
                  rat({1, -1, 0, 1, -2, 1, 2, -6, 6, 3, -20, 30, -6, -65}),
              "reversion-stage head") &&
       ok;
  ok = expect(hankel_transform(tr.reverted.coeffs(), 11) ==
                  rat({1, -1, 1, 2, -1, -3, -5, 7, -4, -23, 29}),
              "reversion-stage Hankel transform") &&
       ok;
  ok = expect(tr.g.head(16) ==
                  rat({1, 1, 2, 2, 3, 4, 4, 6, 7, 6, 11, 10, 6, 22, 8, 0}),
              "final sequence head") &&
       ok;
  std::vector<Rational> hg = hankel_transform(tr.g.coeffs(), 11);
  ok = expect(hg == rat({1, 1, -1, 1, 2, -1, -3, -5, 7, -4, -23}),
              "final Hankel transform") &&
       ok;
  Sequence hseq{0, hg};
  ok = expect(head(bisect(hseq, 0).terms, 6) == rat({1, -1, 2, -3, 7, -23}),
              "bisection of the final Hankel transform") &&
       ok;
  return ok;
}

bool criterion10() {
  std::mt19937_64 rng(4242);
  bool ok = true;

  std::size_t bareiss_trials = 200;
  for (std::size_t t = 0; t < bareiss_trials && ok; ++t) {
    std::size_t size = (std::size_t)draw(rng, 0, 5);
    std::vector<Rational> seq;
    for (std::size_t i = 0; i + 1 < 2 * size + 2; ++i)
      seq.push_back(Rational(draw(rng, -9, 9)));
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m[i][j] = seq[i + j];
    ok = expect(determinant(m) == cofactor_determinant(m),
                "fraction-free determinant vs cofactor oracle, trial " +
                    std::to_string(t));
  }
  info("determinant oracle agreement on " + std::to_string(bareiss_trials) +
       " matrices up to 5x5");

  std::size_t instances = 100;
  for (std::size_t t = 0; t < instances && ok; ++t) {
    std::vector<Rational> c{Rational(draw(rng, 1, 3))};
    for (std::size_t i = 1; i < 8; ++i)
      c.push_back(Rational(draw(rng, -5, 5)));
    Series g(c);
    ok = expect(revert(revert(g)) == g,
                "reversion round trip, trial " + std::to_string(t));
    ok = ok && expect(sqrt(g * g) == g,
                      "square root round trip, trial " + std::to_string(t));
  }

  for (std::size_t t = 0; t < instances && ok; ++t) {
    std::size_t levels = 4;
    JacobiFraction jf;
    for (std::size_t i = 0; i < levels; ++i)
      jf.alphas.push_back(Rational(draw(rng, -4, 4)));
    jf.betas.push_back(Rational(1));
    for (std::size_t i = 1; i < levels; ++i) {
      long long b = draw(rng, 1, 5);
      if (draw(rng, 0, 1)) b = -b;
      jf.betas.push_back(Rational(b));
    }
    Series expanded = series_from_jacobi(jf, 2 * levels);
    JacobiFraction back = jacobi_from_series_partial(expanded);
    ok = expect(back.alphas == jf.alphas && back.betas == jf.betas,
                "continued-fraction round trip, trial " + std::to_string(t));
  }

  for (std::size_t t = 0; t < instances && ok; ++t) {
    std::vector<Rational> c{Rational(1)};
    for (std::size_t i = 1; i < 11; ++i)
      c.push_back(Rational(draw(rng, -5, 5)));
    Series g(c);
    Rational r(draw(rng, -3, 3));
    std::vector<Rational> h = hankel_transform(g.coeffs(), 6);
    ok = expect(hankel_transform(binomial_transform(g, r).coeffs(), 6) == h,
                "Hankel invariance under the binomial transform, trial " +
                    std::to_string(t));
    ok = ok &&
         expect(hankel_transform(invert_transform(g, r).coeffs(), 6) == h,
                "Hankel invariance under the INVERT transform, trial " +
                    std::to_string(t));
  }
  info(std::to_string(instances) +
       " instances each: reversion, square root, continued fraction, Hankel "
       "invariance");
  return ok;
}

bool criterion11() {
  OeisClient client(true);
  std::vector<NamedCheck> checks = standard_cross_checks(client);
  bool ok = true;
  std::set<std::string> used;
  for (const NamedCheck& c : checks) {
    ok = expect(c.pass, c.name + " vs " + c.oeis_id) && ok;
    used.insert(c.oeis_id);
  }
  std::vector<std::string> ids = bundled_ids();
  ok = expect(used == std::set<std::string>(ids.begin(), ids.end()),
              "every bundled sequence is exercised") &&
       ok;
  info(std::to_string(checks.size()) + " cross-checks over " +
       std::to_string(ids.size()) + " bundled sequences, offline");
  return ok;
}

}  // namespace

int main() {
  std::vector<Curve> curves = battery();
  std::vector<CurveReport> reports;
  reports.reserve(curves.size());
  for (const Curve& curve : curves)
    reports.push_back(verify_conjectures(curve, 8));

  criterion(1, "reference curve sequence, scaled Hankel transform and Somos-4 fit",
            criterion1);
  criterion(2, "scaled Hankel values match division-polynomial values on 51 curves",
            [&] { return criterion2(reports); });
  criterion(3, "Hankel-derived coordinates match group-law multiples",
            [&] { return criterion3(reports); });
  criterion(4, "group-law continued fraction reproduces the sequence",
            [&] { return criterion4(reports); });
  criterion(5, "algebraic closed form and leading-coefficient formulas",
            [&] { return criterion5(curves); });
  criterion(6, "singular-curve fixtures and the b = 0 hard error", criterion6);
  criterion(7, "expanded coefficient formula agreement",
            [&] { return criterion7(curves); });
  criterion(8, "shared Hankel transforms across related sequences", criterion8);
  criterion(9, "stage fixtures for y^2 + y = x^3 - x", criterion9);
  criterion(10, "determinant and series kernel properties", criterion10);
  criterion(11, "offline OEIS cross-checks", criterion11);

  if (failures == 0) {
    std::cout << "acceptance: all 11 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria failed\n";
  return 1;
}
