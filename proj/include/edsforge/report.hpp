// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// Verification report structures with JSON and plain-text rendering.
// JSON round-trips exactly: every rational is carried as a "p/q" string.

#ifndef EDSFORGE_REPORT_HPP_
#define EDSFORGE_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edsforge/curve.hpp"
#include "edsforge/hankel.hpp"

namespace edsforge {

// One index of the scaled-Hankel versus division-value comparison.
struct EdsTermCheck {
  std::size_t n = 0;
  Rational htilde;
  Rational psi;  // psi_{n+1} at the origin point
  bool raw_match = false;
  bool abs_match = false;

  friend bool operator==(const EdsTermCheck&, const EdsTermCheck&) = default;
};

struct Conjecture1Report {
  bool pass = false;
  std::vector<EdsTermCheck> terms;
  bool raw_all = false;
  bool abs_all = false;
  // One character per index: '+' exact, '-' sign flip only, 'x' mismatch.
  std::string sign_pattern;
  std::optional<std::size_t> first_abs_mismatch;
  SomosParams expected{0, 0};
  std::optional<SomosParams> fitted;
  bool fit_matches = false;
  std::size_t windows = 0;
  std::optional<std::size_t> first_window_failure;

  friend bool operator==(const Conjecture1Report&,
                         const Conjecture1Report&) = default;
};

// Index n compares Hankel-derived coordinates against the point (n+1)P.
// status: "match"    both coordinates computed and equal;
//         "partial"  y-pivot vanished, x computed and equal;
//         "infinity" h_n = 0 and the oracle point is at infinity;
//         "mismatch" anything else.
struct CoordCheck {
  std::size_t n = 0;
  std::string status;
  std::optional<Rational> x, y;
  std::optional<Rational> oracle_x, oracle_y;

  friend bool operator==(const CoordCheck&, const CoordCheck&) = default;
};

struct Conjecture2Report {
  bool pass = false;
  std::vector<CoordCheck> points;
  std::optional<std::size_t> first_mismatch;

  friend bool operator==(const Conjecture2Report&,
                         const Conjecture2Report&) = default;
};

// Continued-fraction coefficients by two routes: from the Hankel data and
// from the group law. On torsion curves both routes stop early; the report
// is still a pass when they stop at the same level with equal prefixes
// (`degenerate` is set so callers can count these).
struct Conjecture3Report {
  bool pass = false;
  bool degenerate = false;
  std::optional<std::size_t> hankel_stop;
  std::optional<std::size_t> point_stop;
  std::string stop_reason;
  bool prefix_match = false;
  std::vector<Rational> alphas_hankel, betas_hankel;
  std::vector<Rational> alphas_point, betas_point;
  std::size_t series_compared = 0;
  std::size_t series_matched = 0;
  std::optional<std::size_t> first_mismatch;

  friend bool operator==(const Conjecture3Report&,
                         const Conjecture3Report&) = default;
};

struct CurveReport {
  Curve curve{0, 0, 0, 0, 0};
  Int discriminant = 0;
  std::size_t depth = 0;
  std::vector<Rational> a_head;
  Conjecture1Report conjecture1;
  Conjecture2Report conjecture2;
  Conjecture3Report conjecture3;
  bool pass = false;

  friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

struct SweepReport {
  std::uint64_t seed = 0;
  long long bound = 0;
  std::size_t depth = 0;
  std::vector<CurveReport> curves;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool pass = false;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

nlohmann::json to_json(const CurveReport& r);
nlohmann::json to_json(const SweepReport& r);
CurveReport curve_report_from_json(const nlohmann::json& j);
SweepReport sweep_report_from_json(const nlohmann::json& j);

std::string render_text(const CurveReport& r);
std::string render_text(const SweepReport& r);

}  // namespace edsforge

#endif  // EDSFORGE_REPORT_HPP_
