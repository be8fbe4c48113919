// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "edsforge/report.hpp"

#include <sstream>

#include "edsforge/errors.hpp"

namespace edsforge {

namespace {

using nlohmann::json;

json rational_json(const Rational& v) { return to_string(v); }

json optional_rational_json(const std::optional<Rational>& v) {
  return v ? json(to_string(*v)) : json(nullptr);
}

json optional_size_json(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_json(x));
  return arr;
}

Rational rational_from(const json& j) { return parse_rational(j.get<std::string>()); }

std::optional<Rational> optional_rational_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from(j);
}

std::optional<std::size_t> optional_size_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::size_t>();
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

json somos_json(const SomosParams& p) {
  return json{{"s", rational_json(p.s)}, {"t", rational_json(p.t)}};
}

SomosParams somos_from(const json& j) {
  return SomosParams{rational_from(j.at("s")), rational_from(j.at("t"))};
}

}  // namespace

json to_json(const CurveReport& r) {
  json c1{{"pass", r.conjecture1.pass},
          {"raw_all", r.conjecture1.raw_all},
          {"abs_all", r.conjecture1.abs_all},
          {"sign_pattern", r.conjecture1.sign_pattern},
          {"first_abs_mismatch", optional_size_json(r.conjecture1.first_abs_mismatch)},
          {"somos",
           {{"expected", somos_json(r.conjecture1.expected)},
            {"fitted", r.conjecture1.fitted ? somos_json(*r.conjecture1.fitted)
                                            : json(nullptr)},
            {"fit_matches", r.conjecture1.fit_matches},
            {"windows", r.conjecture1.windows},
            {"first_window_failure",
             optional_size_json(r.conjecture1.first_window_failure)}}}};
  json terms = json::array();
  for (const auto& t : r.conjecture1.terms) {
    terms.push_back(json{{"n", t.n},
                         {"htilde", rational_json(t.htilde)},
                         {"psi", rational_json(t.psi)},
                         {"raw_match", t.raw_match},
                         {"abs_match", t.abs_match}});
  }
  c1["terms"] = std::move(terms);

  json pts = json::array();
  for (const auto& p : r.conjecture2.points) {
    pts.push_back(json{{"n", p.n},
                       {"status", p.status},
                       {"x", optional_rational_json(p.x)},
                       {"y", optional_rational_json(p.y)},
                       {"oracle_x", optional_rational_json(p.oracle_x)},
                       {"oracle_y", optional_rational_json(p.oracle_y)}});
  }
  json c2{{"pass", r.conjecture2.pass},
          {"first_mismatch", optional_size_json(r.conjecture2.first_mismatch)},
          {"points", std::move(pts)}};

  const auto& c3r = r.conjecture3;
  json c3{{"pass", c3r.pass},
          {"degenerate", c3r.degenerate},
          {"hankel_stop", optional_size_json(c3r.hankel_stop)},
          {"point_stop", optional_size_json(c3r.point_stop)},
          {"stop_reason", c3r.stop_reason},
          {"prefix_match", c3r.prefix_match},
          {"alphas_hankel", rationals_json(c3r.alphas_hankel)},
          {"betas_hankel", rationals_json(c3r.betas_hankel)},
          {"alphas_point", rationals_json(c3r.alphas_point)},
          {"betas_point", rationals_json(c3r.betas_point)},
          {"series_compared", c3r.series_compared},
          {"series_matched", c3r.series_matched},
          {"first_mismatch", optional_size_json(c3r.first_mismatch)}};

  return json{{"curve", to_string(r.curve)},
              {"equation", pretty(r.curve)},
              {"discriminant", r.discriminant.str()},
              {"depth", r.depth},
              {"a_head", rationals_json(r.a_head)},
              {"conjecture1", std::move(c1)},
              {"conjecture2", std::move(c2)},
              {"conjecture3", std::move(c3)},
              {"pass", r.pass}};
}

CurveReport curve_report_from_json(const json& j) {
  CurveReport r;
  r.curve = parse_curve(j.at("curve").get<std::string>());
  r.discriminant = parse_int(j.at("discriminant").get<std::string>());
  r.depth = j.at("depth").get<std::size_t>();
  r.a_head = rationals_from(j.at("a_head"));
  const json& c1 = j.at("conjecture1");
  r.conjecture1.pass = c1.at("pass").get<bool>();
  r.conjecture1.raw_all = c1.at("raw_all").get<bool>();
  r.conjecture1.abs_all = c1.at("abs_all").get<bool>();
  r.conjecture1.sign_pattern = c1.at("sign_pattern").get<std::string>();
  r.conjecture1.first_abs_mismatch = optional_size_from(c1.at("first_abs_mismatch"));
  const json& somos = c1.at("somos");
  r.conjecture1.expected = somos_from(somos.at("expected"));
  if (!somos.at("fitted").is_null())
    r.conjecture1.fitted = somos_from(somos.at("fitted"));
  r.conjecture1.fit_matches = somos.at("fit_matches").get<bool>();
  r.conjecture1.windows = somos.at("windows").get<std::size_t>();
  r.conjecture1.first_window_failure =
      optional_size_from(somos.at("first_window_failure"));
  for (const json& t : c1.at("terms")) {
    EdsTermCheck term;
    term.n = t.at("n").get<std::size_t>();
    term.htilde = rational_from(t.at("htilde"));
    term.psi = rational_from(t.at("psi"));
    term.raw_match = t.at("raw_match").get<bool>();
    term.abs_match = t.at("abs_match").get<bool>();
    r.conjecture1.terms.push_back(std::move(term));
  }
  const json& c2 = j.at("conjecture2");
  r.conjecture2.pass = c2.at("pass").get<bool>();
  r.conjecture2.first_mismatch = optional_size_from(c2.at("first_mismatch"));
  for (const json& p : c2.at("points")) {
    CoordCheck cc;
    cc.n = p.at("n").get<std::size_t>();
    cc.status = p.at("status").get<std::string>();
    cc.x = optional_rational_from(p.at("x"));
    cc.y = optional_rational_from(p.at("y"));
    cc.oracle_x = optional_rational_from(p.at("oracle_x"));
    cc.oracle_y = optional_rational_from(p.at("oracle_y"));
    r.conjecture2.points.push_back(std::move(cc));
  }
  const json& c3 = j.at("conjecture3");
  r.conjecture3.pass = c3.at("pass").get<bool>();
  r.conjecture3.degenerate = c3.at("degenerate").get<bool>();
  r.conjecture3.hankel_stop = optional_size_from(c3.at("hankel_stop"));
  r.conjecture3.point_stop = optional_size_from(c3.at("point_stop"));
  r.conjecture3.stop_reason = c3.at("stop_reason").get<std::string>();
  r.conjecture3.prefix_match = c3.at("prefix_match").get<bool>();
  r.conjecture3.alphas_hankel = rationals_from(c3.at("alphas_hankel"));
  r.conjecture3.betas_hankel = rationals_from(c3.at("betas_hankel"));
  r.conjecture3.alphas_point = rationals_from(c3.at("alphas_point"));
  r.conjecture3.betas_point = rationals_from(c3.at("betas_point"));
  r.conjecture3.series_compared = c3.at("series_compared").get<std::size_t>();
  r.conjecture3.series_matched = c3.at("series_matched").get<std::size_t>();
  r.conjecture3.first_mismatch = optional_size_from(c3.at("first_mismatch"));
  r.pass = j.at("pass").get<bool>();
  return r;
}

json to_json(const SweepReport& r) {
  json curves = json::array();
  for (const auto& c : r.curves) curves.push_back(to_json(c));
  return json{{"seed", r.seed},   {"bound", r.bound},   {"depth", r.depth},
              {"passed", r.passed}, {"failed", r.failed}, {"pass", r.pass},
              {"curves", std::move(curves)}};
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.bound = j.at("bound").get<long long>();
  r.depth = j.at("depth").get<std::size_t>();
  r.passed = j.at("passed").get<std::size_t>();
  r.failed = j.at("failed").get<std::size_t>();
  r.pass = j.at("pass").get<bool>();
  for (const json& c : j.at("curves"))
    r.curves.push_back(curve_report_from_json(c));
  return r;
}

namespace {

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

}  // namespace

std::string render_text(const CurveReport& r) {
  std::ostringstream out;
  out << "curve: " << to_string(r.curve) << "   (" << pretty(r.curve) << ")\n";
  out << "discriminant: " << r.discriminant.str() << "\n";
  out << "depth: " << r.depth << "\n";
  out << "sequence: " << join(r.a_head, ", ") << ", ...\n";

  const auto& c1 = r.conjecture1;
  out << "conjecture 1 (scaled Hankel vs division values): " << verdict(c1.pass)
      << "\n";
  std::vector<Rational> ht, psi;
  for (const auto& t : c1.terms) {
    ht.push_back(t.htilde);
    psi.push_back(t.psi);
  }
  out << "  htilde: " << join(ht, ", ") << "\n";
  out << "  psi:    " << join(psi, ", ") << "\n";
  out << "  sign pattern: " << c1.sign_pattern
      << (c1.raw_all ? " (exact match)" : c1.abs_all ? " (match up to sign)"
                                                     : " (mismatch)")
      << "\n";
  out << "  somos4: expected (" << to_string(c1.expected.s) << ", "
      << to_string(c1.expected.t) << ")";
  if (c1.fitted) {
    out << ", fitted (" << to_string(c1.fitted->s) << ", "
        << to_string(c1.fitted->t) << ")";
  } else {
    out << ", fit underdetermined";
  }
  out << ", " << c1.windows << " windows";
  if (c1.first_window_failure) {
    out << ", first failure at window " << *c1.first_window_failure;
  } else {
    out << " consistent";
  }
  out << "\n";

  const auto& c2 = r.conjecture2;
  out << "conjecture 2 (Hankel coordinates vs group law): " << verdict(c2.pass)
      << "\n";
  for (const auto& p : c2.points) {
    out << "  n=" << p.n << ": " << p.status;
    if (p.x) {
      out << "  (" << to_string(*p.x);
      if (p.y) out << ", " << to_string(*p.y);
      out << ")";
    }
    out << "\n";
  }

  const auto& c3 = r.conjecture3;
  out << "conjecture 3 (continued-fraction routes): " << verdict(c3.pass)
      << "\n";
  out << "  alphas (hankel): " << join(c3.alphas_hankel, ", ") << "\n";
  out << "  alphas (points): " << join(c3.alphas_point, ", ") << "\n";
  out << "  betas  (hankel): " << join(c3.betas_hankel, ", ") << "\n";
  out << "  betas  (points): " << join(c3.betas_point, ", ") << "\n";
  if (c3.degenerate) {
    out << "  degenerate: stopped at level ";
    if (c3.point_stop) out << *c3.point_stop;
    else out << "?";
    if (!c3.stop_reason.empty()) out << " (" << c3.stop_reason << ")";
    out << "\n";
  }
  out << "  series reproduced " << c3.series_matched << "/"
      << c3.series_compared << " terms\n";

  out << "result: " << verdict(r.pass) << "\n";
  return out.str();
}

std::string render_text(const SweepReport& r) {
  std::ostringstream out;
  out << "sweep: seed " << r.seed << ", bound " << r.bound << ", depth "
      << r.depth << ", " << r.curves.size() << " curves\n";
  for (const auto& c : r.curves) {
    out << "  " << (c.pass ? "ok  " : "FAIL") << "  " << to_string(c.curve);
    if (c.conjecture3.degenerate) out << "  (degenerate, consistent)";
    if (!c.pass) {
      out << "  [c1=" << verdict(c.conjecture1.pass)
          << " c2=" << verdict(c.conjecture2.pass)
          << " c3=" << verdict(c.conjecture3.pass) << "]";
    }
    out << "\n";
  }
  out << "passed " << r.passed << "/" << r.curves.size() << ": "
      << verdict(r.pass) << "\n";
  return out.str();
}

}  // namespace edsforge
