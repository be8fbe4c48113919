// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#include "edsforge/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#ifdef EDSFORGE_HAVE_TLS
#include <httplib.h>
#endif

#include "edsforge/errors.hpp"
#include "edsforge/pipeline.hpp"

namespace edsforge {

namespace {

bool valid_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit((unsigned char)id[i])) return false;
  }
  return true;
}

std::mutex cache_mutex;

}  // namespace

OeisRecord parse_bfile(const std::string& id, const std::string& text) {
  OeisRecord rec;
  rec.id = id;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  long long expected = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    std::string index_text, value_text, extra;
    if (!(fields >> index_text >> value_text))
      throw ParseError(id + " line " + std::to_string(lineno) +
                       ": expected 'index value'");
    if (fields >> extra)
      throw ParseError(id + " line " + std::to_string(lineno) +
                       ": trailing fields");
    long long index;
    try {
      index = std::stoll(index_text);
    } catch (const std::exception&) {
      throw ParseError(id + " line " + std::to_string(lineno) +
                       ": bad index '" + index_text + "'");
    }
    if (first) {
      rec.offset = index;
      expected = index;
      first = false;
    }
    if (index != expected)
      throw ParseError(id + " line " + std::to_string(lineno) +
                       ": index " + std::to_string(index) +
                       " breaks the consecutive run");
    rec.terms.push_back(parse_int(value_text));
    ++expected;
  }
  if (rec.terms.empty()) throw ParseError(id + ": no terms");
  return rec;
}

std::string format_bfile(const OeisRecord& rec) {
  std::string out;
  for (std::size_t i = 0; i < rec.terms.size(); ++i) {
    out += std::to_string(rec.offset + (long long)i);
    out += ' ';
    out += rec.terms[i].str();
    out += '\n';
  }
  return out;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("EDSFORGE_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/edsforge";
  return ".edsforge-cache";
}

OeisClient::OeisClient(bool offline, std::string cache_dir)
    : offline_(offline),
      cache_dir_(cache_dir.empty() ? default_cache_dir() : std::move(cache_dir)) {}

OeisRecord OeisClient::fetch(const std::string& id) {
  if (!valid_id(id))
    throw ParseError("'" + id + "' is not an A-number (expected A followed by "
                     "six digits)");
  if (auto text = bundled_bfile(id)) return parse_bfile(id, std::string(*text));

  std::filesystem::path cached =
      std::filesystem::path(cache_dir_) / (id + ".txt");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (std::filesystem::exists(cached)) {
      std::ifstream in(cached);
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_bfile(id, buffer.str());
    }
  }

  if (offline_)
    throw NetworkDisabled(id + " is not bundled or cached and offline mode "
                          "is on");

#ifdef EDSFORGE_HAVE_TLS
  httplib::SSLClient client("oeis.org");
  client.set_follow_location(true);
  std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  auto res = client.Get(path);
  if (!res || res->status != 200)
    throw NotFound("no b-file for " + id);
  OeisRecord rec = parse_bfile(id, res->body);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    std::filesystem::create_directories(cache_dir_);
    std::ofstream out(cached);
    out << res->body;
  }
  return rec;
#else
  throw NetworkDisabled("built without TLS support");
#endif
}

CrossCheck cross_check(const std::vector<Rational>& computed,
                       const OeisRecord& rec, long long shift, SignRule rule) {
  CrossCheck result;
  for (std::size_t n = 0; n < computed.size(); ++n) {
    long long pos = (long long)n + shift - rec.offset;
    if (pos < 0) continue;
    if (pos >= (long long)rec.terms.size()) break;
    Rational expected(rec.terms[(std::size_t)pos]);
    if (rule == SignRule::alternate_pairs && (binomial(n, 2) % 2 != 0))
      expected = -expected;
    ++result.compared;
    if (computed[n] != expected) {
      result.first_mismatch = n;
      break;
    }
  }
  return result;
}

namespace {

Series catalan_series(std::size_t order) {
  Series root = sqrt(Series::poly({Rational(1), Rational(-4)}, order + 1));
  return drop_prefix(Series::one(order + 1) - root, 1) * Rational(1, 2);
}

// 2 / (1 + 2x + x^2 + sqrt(1 - 4x +6x^2 + x^4)).
Series a178072_series(std::size_t order) {
  Series root = sqrt(Series::poly(
      {Rational(1), Rational(-4), Rational(6), Rational(0), Rational(1)},
      order));
  Series den = Series::poly({Rational(1), Rational(2), Rational(1)}, order) + root;
  return Series::poly({Rational(2)}, order) / den;
}

NamedCheck run_check(OeisClient& client, const std::string& name,
                     const std::string& id,
                     const std::vector<Rational>& computed, long long shift,
                     SignRule rule) {
  OeisRecord rec = client.fetch(id);
  CrossCheck cc = cross_check(computed, rec, shift, rule);
  NamedCheck out;
  out.name = name;
  out.oeis_id = id;
  out.compared = cc.compared;
  out.first_mismatch = cc.first_mismatch;
  out.pass = cc.all_matched();
  return out;
}

}  // namespace

std::vector<NamedCheck> standard_cross_checks(OeisClient& client) {
  std::vector<NamedCheck> checks;

  // Singular cubics whose scaled Hankel transforms are the signed Fibonacci
  // and Pell sequences.
  PipelineTrace fib = forward(Curve{1, 1, -2, 0, 0}, 9, true);
  checks.push_back(run_check(client, "fibonacci-hankel", "A000045",
                             fib.hankel.htilde, 1, SignRule::alternate_pairs));
  PipelineTrace pell = forward(Curve{0, 2, -1, -1, 0}, 8, true);
  checks.push_back(run_check(client, "pell-hankel", "A000129",
                             pell.hankel.htilde, 1, SignRule::alternate_pairs));

  checks.push_back(run_check(client, "catalan-expansion", "A000108",
                             catalan_series(25).coeffs(), 0, SignRule::none));

  // Stage-by-stage identities for y^2 + y = x^3 - x.
  PipelineTrace ed = forward(Curve{0, 1, 0, -1, 0}, 12);
  checks.push_back(run_check(client, "branch-stage", "A056010",
                             ed.dropped.coeffs(), 0, SignRule::none));
  checks.push_back(run_check(client, "branch-stage-shifted", "A025262",
                             ed.dropped.coeffs(), 1, SignRule::none));
  checks.push_back(run_check(client, "somos4-of-branch", "A006720",
                             hankel_transform(ed.dropped.coeffs(), 8), 3,
                             SignRule::none));
  checks.push_back(run_check(client, "wrapped-stage", "A157003",
                             ed.wrapped.coeffs(), 0, SignRule::none));
  checks.push_back(run_check(client, "somos4-of-wrapped", "A006720",
                             hankel_transform(ed.wrapped.coeffs(), 8), 2,
                             SignRule::none));
  checks.push_back(run_check(client, "eds-of-reverted", "A006769",
                             hankel_transform(ed.reverted.coeffs(), 8), 2,
                             SignRule::none));
  checks.push_back(run_check(client, "eds-of-final", "A006769",
                             ed.hankel.h, 1, SignRule::none));

  checks.push_back(run_check(client, "quartic-root-expansion", "A178072",
                             a178072_series(30).coeffs(), 0, SignRule::none));

  // y^2 + xy - y = x^3 + 3x^2 + 2x: its reverted stage is the INVERT(-3)
  // transform of the 4th binomial transform of A178078's expansion.
  PipelineTrace tw = forward(Curve{1, -1, 3, 2, 0}, 12);
  Series bridge = binomial_transform(
      invert_transform(tw.reverted, Rational(3)), Rational(-4));
  checks.push_back(run_check(client, "invert-binomial-bridge", "A178078",
                             bridge.coeffs(), 0, SignRule::none));
  checks.push_back(run_check(client, "somos4-signed", "A178079",
                             tw.hankel.h, 0, SignRule::none));

  return checks;
}

}  // namespace edsforge
