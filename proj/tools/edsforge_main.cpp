// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edsforge/curve.hpp"
#include "edsforge/errors.hpp"
#include "edsforge/hankel.hpp"
#include "edsforge/oeis.hpp"
#include "edsforge/pipeline.hpp"
#include "edsforge/report.hpp"
#include "edsforge/sequence.hpp"

namespace {

using edsforge::Rational;
using nlohmann::json;

json rational_array(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(edsforge::to_string(r));
  return out;
}

json jacobi_json(const edsforge::JacobiFraction& jf) {
  json out;
  out["alphas"] = rational_array(jf.alphas);
  out["betas"] = rational_array(jf.betas);
  out["terminated"] = jf.terminated;
  if (jf.degenerate_at)
    out["degenerate_at"] = *jf.degenerate_at;
  else
    out["degenerate_at"] = nullptr;
  return out;
}

json somos_json(const edsforge::SomosFit& fit) {
  json out;
  if (fit.params) {
    out["s"] = edsforge::to_string(fit.params->s);
    out["t"] = edsforge::to_string(fit.params->t);
  } else {
    out["s"] = nullptr;
    out["t"] = nullptr;
  }
  out["underdetermined"] = fit.underdetermined;
  out["windows"] = fit.windows;
  if (fit.first_violation)
    out["first_violation"] = *fit.first_violation;
  else
    out["first_violation"] = nullptr;
  return out;
}

void print_jacobi_text(const edsforge::JacobiFraction& jf) {
  std::cout << "jacobi alphas: " << edsforge::join(jf.alphas, ", ") << "\n";
  std::cout << "jacobi betas: " << edsforge::join(jf.betas, ", ") << "\n";
  if (jf.terminated) std::cout << "jacobi: terminating (rational series)\n";
  if (jf.degenerate_at)
    std::cout << "jacobi: degenerate at level " << *jf.degenerate_at << "\n";
}

void print_somos_text(const edsforge::SomosFit& fit) {
  if (fit.underdetermined) {
    std::cout << "somos4 fit: underdetermined (" << fit.windows
              << " windows, all consistent)\n";
    return;
  }
  std::cout << "somos4 fit: s = " << edsforge::to_string(fit.params->s)
            << ", t = " << edsforge::to_string(fit.params->t) << " ("
            << fit.windows << " windows)\n";
  if (fit.first_violation)
    std::cout << "somos4 fit: violated at index " << *fit.first_violation
              << "\n";
}

// Sequence files are either JSON {"offset": n, "terms": [...]} with terms as
// "p/q" strings or integers, or plain b-file text.
edsforge::Sequence read_sequence(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw edsforge::ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos)
    throw edsforge::ParseError("'" + path + "' is empty");

  edsforge::Sequence seq;
  if (text[start] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw edsforge::ParseError("'" + path + "': " + e.what());
    }
    seq.offset = doc.value("offset", 0LL);
    if (!doc.contains("terms") || !doc["terms"].is_array())
      throw edsforge::ParseError("'" + path + "': missing terms array");
    for (const auto& t : doc["terms"]) {
      if (t.is_string())
        seq.terms.push_back(edsforge::parse_rational(t.get<std::string>()));
      else if (t.is_number_integer())
        seq.terms.push_back(Rational(t.get<long long>()));
      else
        throw edsforge::ParseError("'" + path +
                                   "': terms must be strings or integers");
    }
  } else {
    edsforge::OeisRecord rec = edsforge::parse_bfile("input", text);
    seq.offset = rec.offset;
    for (const auto& t : rec.terms) seq.terms.push_back(Rational(t));
  }
  if (seq.terms.empty())
    throw edsforge::ParseError("'" + path + "' has no terms");
  return seq;
}

std::size_t depth_for_terms(std::size_t terms) {
  std::size_t depth = 8;
  while (2 * depth + 6 < terms) ++depth;
  return depth;
}

int run_derive(const std::string& curve_str, std::size_t terms,
               bool allow_singular, bool stages, const std::string& format) {
  edsforge::Curve curve = edsforge::parse_curve(curve_str);
  edsforge::PipelineTrace tr =
      edsforge::forward(curve, depth_for_terms(terms), allow_singular);
  std::vector<Rational> a_head = edsforge::head(tr.a.terms, terms);

  if (format == "json") {
    json out;
    out["curve"] = edsforge::to_string(curve);
    out["equation"] = edsforge::pretty(curve);
    out["discriminant"] = curve.discriminant().str();
    out["a"] = rational_array(a_head);
    out["h"] = rational_array(tr.hankel.h);
    out["hstar"] = rational_array(tr.hankel.hstar);
    out["htilde"] = rational_array(tr.hankel.htilde);
    out["jacobi"] = jacobi_json(tr.jfrac);
    out["somos"] = tr.hankel.htilde.size() >= 6 ? somos_json(tr.somos)
                                                : json(nullptr);
    if (stages) {
      out["branch"] = rational_array(tr.branch.coeffs());
      out["rescaled"] = rational_array(tr.rescaled.coeffs());
      out["dropped"] = rational_array(tr.dropped.coeffs());
      out["wrapped"] = rational_array(tr.wrapped.coeffs());
      out["reverted"] = rational_array(tr.reverted.coeffs());
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "curve: " << edsforge::pretty(curve) << "\n";
  std::cout << "discriminant: " << curve.discriminant().str() << "\n";
  if (stages) {
    std::cout << "y: " << edsforge::join(edsforge::head(tr.branch.coeffs(), terms), ", ") << "\n";
    std::cout << "rescaled: " << edsforge::join(edsforge::head(tr.rescaled.coeffs(), terms), ", ") << "\n";
    std::cout << "dropped: " << edsforge::join(edsforge::head(tr.dropped.coeffs(), terms), ", ") << "\n";
    std::cout << "wrapped: " << edsforge::join(edsforge::head(tr.wrapped.coeffs(), terms), ", ") << "\n";
    std::cout << "reverted: " << edsforge::join(edsforge::head(tr.reverted.coeffs(), terms), ", ") << "\n";
  }
  std::cout << "a: " << edsforge::join(a_head, ", ") << "\n";
  std::cout << "h: " << edsforge::join(tr.hankel.h, ", ") << "\n";
  std::cout << "htilde: " << edsforge::join(tr.hankel.htilde, ", ") << "\n";
  print_jacobi_text(tr.jfrac);
  if (tr.hankel.htilde.size() >= 6) print_somos_text(tr.somos);
  return 0;
}

int run_verify(const std::string& curve_str, std::size_t depth,
               const std::string& format) {
  edsforge::Curve curve = edsforge::parse_curve(curve_str);
  edsforge::CurveReport rep = edsforge::verify_conjectures(curve, depth);
  if (format == "json")
    std::cout << edsforge::to_json(rep).dump(2) << "\n";
  else
    std::cout << edsforge::render_text(rep);
  return rep.pass ? 0 : 1;
}

int run_hankel(const std::string& curve_str, const std::string& input,
               std::size_t count, const std::string& base_str,
               const std::string& format) {
  std::vector<Rational> h, hstar, htilde;
  std::optional<edsforge::Int> base;
  if (!base_str.empty()) base = edsforge::parse_int(base_str);

  if (!curve_str.empty()) {
    edsforge::Curve curve = edsforge::parse_curve(curve_str);
    std::size_t depth = count ? count : 8;
    edsforge::PipelineTrace tr = edsforge::forward(curve, depth_for_terms(2 * depth));
    edsforge::HankelData hd =
        edsforge::hankel_data(tr.a.terms, depth, base ? *base : curve.b);
    h = hd.h;
    hstar = hd.hstar;
    htilde = hd.htilde;
  } else {
    edsforge::Sequence seq = read_sequence(input);
    std::size_t most = (seq.terms.size() + 1) / 2;
    std::size_t n = count ? std::min(count, most) : most;
    h = edsforge::hankel_transform(seq.terms, n);
    if (2 * n <= seq.terms.size())
      hstar = edsforge::modified_hankel_transform(seq.terms, n);
    if (base) htilde = edsforge::rescale_hankel(h, *base);
  }

  if (format == "json") {
    json out;
    out["h"] = rational_array(h);
    out["hstar"] = hstar.empty() ? json(nullptr) : rational_array(hstar);
    out["htilde"] = htilde.empty() ? json(nullptr) : rational_array(htilde);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "h: " << edsforge::join(h, ", ") << "\n";
  if (!hstar.empty())
    std::cout << "hstar: " << edsforge::join(hstar, ", ") << "\n";
  if (!htilde.empty())
    std::cout << "htilde: " << edsforge::join(htilde, ", ") << "\n";
  return 0;
}

int run_jfrac(const std::string& curve_str, const std::string& input,
              const std::string& format) {
  edsforge::JacobiFraction jf;
  if (!curve_str.empty()) {
    edsforge::Curve curve = edsforge::parse_curve(curve_str);
    jf = edsforge::forward(curve, 8).jfrac;
  } else {
    edsforge::Sequence seq = read_sequence(input);
    jf = edsforge::jacobi_from_series_partial(edsforge::Series(seq.terms));
  }
  if (format == "json") {
    std::cout << jacobi_json(jf).dump(2) << "\n";
    return 0;
  }
  print_jacobi_text(jf);
  return 0;
}

int run_somos(const std::string& curve_str, const std::string& input,
              const std::string& format) {
  std::vector<Rational> terms;
  if (!curve_str.empty()) {
    edsforge::Curve curve = edsforge::parse_curve(curve_str);
    terms = edsforge::forward(curve, 8).hankel.htilde;
  } else {
    terms = read_sequence(input).terms;
  }
  edsforge::SomosFit fit = edsforge::somos4_fit(terms);
  if (format == "json")
    std::cout << somos_json(fit).dump(2) << "\n";
  else
    print_somos_text(fit);
  return (fit.underdetermined || fit.consistent()) ? 0 : 1;
}

int run_points(const std::string& curve_str, std::size_t count,
               const std::string& format) {
  edsforge::Curve curve = edsforge::parse_curve(curve_str);
  edsforge::Point origin = edsforge::point_on(curve, 0, 0);
  std::vector<edsforge::Point> pts = edsforge::origin_multiples(curve, count);
  std::vector<Rational> psi =
      edsforge::division_sequence(curve, origin, count + 2);

  if (format == "json") {
    json out;
    out["curve"] = edsforge::to_string(curve);
    json arr = json::array();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      json p;
      p["n"] = k + 1;
      if (pts[k].is_infinity()) {
        p["infinity"] = true;
      } else {
        p["infinity"] = false;
        p["x"] = edsforge::to_string(pts[k].x());
        p["y"] = edsforge::to_string(pts[k].y());
      }
      arr.push_back(p);
    }
    out["multiples"] = arr;
    out["psi"] = rational_array(psi);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "curve: " << edsforge::pretty(curve) << "\n";
  for (std::size_t k = 0; k < pts.size(); ++k)
    std::cout << (k + 1) << "P = " << edsforge::to_string(pts[k]) << "\n";
  std::cout << "psi at (0, 0): " << edsforge::join(psi, ", ") << "\n";
  return 0;
}

int run_oeis_check(bool offline, const std::string& format) {
  edsforge::OeisClient client(offline);
  std::vector<edsforge::NamedCheck> checks =
      edsforge::standard_cross_checks(client);
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;

  if (format == "json") {
    json out = json::array();
    for (const auto& c : checks) {
      json e;
      e["name"] = c.name;
      e["oeis_id"] = c.oeis_id;
      e["pass"] = c.pass;
      e["compared"] = c.compared;
      if (c.first_mismatch)
        e["first_mismatch"] = *c.first_mismatch;
      else
        e["first_mismatch"] = nullptr;
      out.push_back(e);
    }
    std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
  }

  for (const auto& c : checks) {
    if (c.pass) {
      std::cout << "[ ok ] " << c.name << " vs " << c.oeis_id << " ("
                << c.compared << " terms)\n";
    } else {
      std::cout << "[FAIL] " << c.name << " vs " << c.oeis_id
                << " (first mismatch at index "
                << (c.first_mismatch ? std::to_string(*c.first_mismatch)
                                     : std::string("none"))
                << ")\n";
    }
  }
  std::cout << (all ? "oeis-check: PASS\n" : "oeis-check: FAIL\n");
  return all ? 0 : 1;
}

int run_sweep(const edsforge::SweepConfig& config, const std::string& format) {
  edsforge::SweepReport rep = edsforge::sweep(config);
  if (format == "json")
    std::cout << edsforge::to_json(rep).dump(2) << "\n";
  else
    std::cout << edsforge::render_text(rep);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic pipeline from cubic curves with a rational "
               "point at the origin to Somos-4 Hankel sequences"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string curve_str, input, base_str;
  std::size_t terms = 12, depth = 8, count = 0;
  bool allow_singular = false, stages = false, offline = false;

  auto* derive = app.add_subcommand(
      "derive", "Derive the sequence, Hankel data, continued fraction and "
                "Somos-4 fit for a curve");
  derive->fallthrough();
  derive->add_option("--curve", curve_str, "Curve a,b,c,d with e = 0 implied")
      ->required();
  derive->add_option("--terms", terms, "Sequence terms to print")
      ->check(CLI::Range(std::size_t(1), std::size_t(200)));
  derive->add_flag("--allow-singular", allow_singular,
                   "Run the series pipeline even when the discriminant "
                   "vanishes");
  derive->add_flag("--stages", stages, "Print intermediate pipeline stages");

  auto* verify = app.add_subcommand(
      "verify", "Check the Hankel sequence against the curve group-law "
                "predictions");
  verify->fallthrough();
  verify->add_option("--curve", curve_str, "Curve a,b,c,d with e = 0 implied")
      ->required();
  verify->add_option("--depth", depth, "Hankel depth")
      ->check(CLI::Range(std::size_t(6), std::size_t(64)));

  auto* hankel = app.add_subcommand(
      "hankel", "Hankel transform of a curve's sequence or an input sequence");
  hankel->fallthrough();
  hankel->add_option("--curve", curve_str, "Curve a,b,c,d with e = 0 implied");
  hankel->add_option("--input", input,
                     "Sequence file (JSON or b-file), '-' for stdin");
  hankel->add_option("--count", count, "Number of Hankel determinants");
  hankel->add_option("--base", base_str,
                     "Rescale h(n) by base^(n^2-2n) into htilde");

  auto* jfrac = app.add_subcommand(
      "jfrac", "Jacobi continued fraction of a curve's sequence or an input "
               "sequence");
  jfrac->fallthrough();
  jfrac->add_option("--curve", curve_str, "Curve a,b,c,d with e = 0 implied");
  jfrac->add_option("--input", input,
                    "Sequence file (JSON or b-file), '-' for stdin");

  auto* somos = app.add_subcommand(
      "somos", "Fit h(n)h(n-4) = s h(n-1)h(n-3) + t h(n-2)^2 on a curve's "
               "rescaled Hankel sequence or an input sequence");
  somos->fallthrough();
  somos->add_option("--curve", curve_str, "Curve a,b,c,d with e = 0 implied");
  somos->add_option("--input", input,
                    "Sequence file (JSON or b-file), '-' for stdin");

  auto* points = app.add_subcommand(
      "points", "Multiples of (0, 0) and division polynomial values");
  points->fallthrough();
  points->add_option("--curve", curve_str, "Curve a,b,c,d with e = 0 implied")
      ->required();
  points->add_option("--count", count, "Number of multiples")
      ->check(CLI::Range(std::size_t(1), std::size_t(64)));

  auto* oeis_check = app.add_subcommand(
      "oeis-check", "Cross-check pipeline stages against bundled OEIS "
                    "b-files");
  oeis_check->fallthrough();
  oeis_check->add_flag("--offline", offline,
                       "Never touch the network, even for sequences that are "
                       "not bundled");

  edsforge::SweepConfig sweep_config;
  auto* sweep = app.add_subcommand(
      "sweep", "Verify the conjectures on randomly sampled curves");
  sweep->fallthrough();
  sweep->add_option("--count", sweep_config.count, "Curves to sample");
  sweep->add_option("--bound", sweep_config.bound, "Coefficient bound");
  sweep->add_option("--seed", sweep_config.seed, "Sampler seed");
  sweep->add_option("--depth", sweep_config.depth, "Hankel depth per curve")
      ->check(CLI::Range(std::size_t(6), std::size_t(64)));
  sweep->add_option("--threads", sweep_config.threads,
                    "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(derive))
      return run_derive(curve_str, terms, allow_singular, stages, format);
    if (app.got_subcommand(verify)) return run_verify(curve_str, depth, format);
    if (app.got_subcommand(hankel)) {
      if (curve_str.empty() == input.empty()) {
        std::cerr << "error: hankel needs exactly one of --curve, --input\n";
        return 2;
      }
      return run_hankel(curve_str, input, count, base_str, format);
    }
    if (app.got_subcommand(jfrac)) {
      if (curve_str.empty() == input.empty()) {
        std::cerr << "error: jfrac needs exactly one of --curve, --input\n";
        return 2;
      }
      return run_jfrac(curve_str, input, format);
    }
    if (app.got_subcommand(somos)) {
      if (curve_str.empty() == input.empty()) {
        std::cerr << "error: somos needs exactly one of --curve, --input\n";
        return 2;
      }
      return run_somos(curve_str, input, format);
    }
    if (app.got_subcommand(points))
      return run_points(curve_str, count ? count : 8, format);
    if (app.got_subcommand(oeis_check)) return run_oeis_check(offline, format);
    if (app.got_subcommand(sweep)) return run_sweep(sweep_config, format);
  } catch (const edsforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
