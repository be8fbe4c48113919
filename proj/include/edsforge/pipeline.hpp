// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// The derivation pipeline: from a curve y^2 + axy + by = x^3 + cx^2 + dx
// with b != 0 to a generating function whose Hankel transform, after
// rescaling by powers of b, is an elliptic divisibility sequence, plus the
// closed forms and the verification harness built on top of it.

#ifndef EDSFORGE_PIPELINE_HPP_
#define EDSFORGE_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edsforge/curve.hpp"
#include "edsforge/hankel.hpp"
#include "edsforge/report.hpp"
#include "edsforge/sequence.hpp"
#include "edsforge/series.hpp"

namespace edsforge {

// Every stage that leads from the curve to the final sequence. All series
// carry 2*depth + 6 coefficients; the Hankel vectors carry `depth` entries.
struct PipelineTrace {
  Curve curve{0, 0, 0, 0, 0};
  Series branch;    // y(x) solving the curve equation, y(0) = -b
  Series rescaled;  // y_n * b^(2n-1)
  Series dropped;   // rescaled with the first two terms removed
  Series wrapped;   // 1/(1 - x - x^2 * dropped)
  Series reverted;  // reversion of wrapped
  Series g;         // 1/(1 - x - x^2 * reverted); starts 1,1,2,2
  Sequence a;       // coefficients of g
  HankelData hankel;
  JacobiFraction jfrac;  // from the Hankel data (partial on torsion curves)
  SomosFit somos;        // fit over htilde, when at least 6 entries exist
};

// Requires e = 0, b != 0 (ZeroScaleBase) and, unless allow_singular, a
// nonzero discriminant (SingularOperation). Throws BranchResolutionFailed
// if the resulting sequence does not start 1,1,2,2.
PipelineTrace forward(const Curve& curve, std::size_t depth,
                      bool allow_singular = false);

// Radicand and denominator coefficients of the closed form
//   g(x) = 2 b^4 x / (sqrt(A x^4 + B x^3 + C x^2 + D x + 1) + F x^2 + G x - 1).
struct ClosedFormCoefficients {
  Int A, B, C, D, F, G;

  friend bool operator==(const ClosedFormCoefficients&,
                         const ClosedFormCoefficients&) = default;
};

ClosedFormCoefficients closed_form_coefficients(const Curve& curve);
Series closed_form_series(const Curve& curve, std::size_t order);

// Leading coefficients of g and of the scaled Hankel transform as polynomial
// expressions in the curve coefficients.
Rational predicted_a4(const Curve& curve);
Rational predicted_a5(const Curve& curve);
Rational predicted_htilde2(const Curve& curve);
Rational predicted_htilde3(const Curve& curve);

// Greek-letter shorthands used by the Riordan-style closed form.
struct RiordanCoefficients {
  Int alpha, beta, gamma, delta, epsilon;

  friend bool operator==(const RiordanCoefficients&,
                         const RiordanCoefficients&) = default;
};

RiordanCoefficients riordan_coefficients(const Curve& curve);

// g as  b^4 x / (1 + alpha x + beta x^2) * C(W)
//       + (1 + alpha x + beta x^2) / (1 + eps x + delta x^2 - gamma x^3),
// with C the Catalan generating function and
// W = b^4 x (gamma x^3 - delta x^2 - eps x - 1) / (1 + alpha x + beta x^2)^2.
Series riordan_series(const Curve& curve, std::size_t order);

// The fully expanded coefficient formula. `corrected` carries the two
// repairs that make it agree with the pipeline (an alternating sign inside
// the auxiliary double sum and a Catalan factor in the outer sum);
// `printed` is the formula without either repair and `half_corrected`
// restores only the sign. Kept selectable so the disagreement indices of
// the uncorrected variants stay observable.
enum class RiordanFormula { corrected, printed, half_corrected };

Rational riordan_term(const Curve& curve, std::size_t n,
                      RiordanFormula which = RiordanFormula::corrected);

// k * (0,0) for k = 1..count.
std::vector<Point> origin_multiples(const Curve& curve, std::size_t count);

// The point (n+1)P reconstructed from Hankel data:
//   x_n = -(1/b^2) h_{n-1} h_{n+1} / h_n^2
//   y_n = x_n/b * (h*_{n+1}/h_{n+1} - h*_n/h_n + d + 1)
// h_n = 0 yields the point at infinity; h_n != 0 with h_{n+1} = 0 leaves y
// undetermined and throws ZeroHankelPivot.
Point coords_from_hankel(const Curve& curve, const HankelData& hd,
                         std::size_t n);

// Continued-fraction coefficients read off the group law:
//   alpha_0 = 1, alpha_1 = -1, alpha_n = b y(nP)/x(nP) - (d+1)  (n >= 2)
//   beta_1 = 1, beta_n = -b^2 x(nP)                             (n >= 2)
// Stops at a point at infinity or a vanishing x-coordinate; the stop level
// and reason are recorded rather than thrown.
struct PointJacobi {
  JacobiFraction jf;
  std::optional<std::size_t> stop_level;
  std::string stop_reason;
};

PointJacobi jacobi_from_points(const Curve& curve, std::size_t levels);

// Runs all three comparisons at the given depth. Requires e = 0, b != 0 and
// a nonsingular curve.
CurveReport verify_conjectures(const Curve& curve, std::size_t depth);

struct SweepConfig {
  std::uint64_t seed = 1;
  long long bound = 4;
  std::size_t count = 50;
  std::size_t depth = 8;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Random nonsingular curves with a, c, d in [-bound, bound] and b in
// [1, bound], verified in parallel. Curves are drawn sequentially from a
// deterministic generator, so the report depends only on the config.
SweepReport sweep(const SweepConfig& config);

}  // namespace edsforge

#endif  // EDSFORGE_PIPELINE_HPP_
