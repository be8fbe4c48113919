// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "edsforge/pipeline.hpp"
#include "edsforge/report.hpp"
#include "test_util.hpp"

using namespace edsforge;

TEST_CASE("curve report json round trip") {
  CurveReport rep = verify_conjectures(Curve{2, 5, 4, 9, 0}, 8);
  nlohmann::json j = to_json(rep);
  CHECK(j["pass"].get<bool>() == rep.pass);
  CHECK(j["curve"].get<std::string>() == "2,5,4,9");
  CHECK(j["equation"].get<std::string>() == "y^2 + 2xy + 5y = x^3 + 4x^2 + 9x");
  CHECK(j["discriminant"].get<std::string>() == "-38091");
  CHECK(curve_report_from_json(j) == rep);

  // Serialize through text to make sure nothing depends on in-memory json.
  nlohmann::json reparsed = nlohmann::json::parse(j.dump());
  CHECK(curve_report_from_json(reparsed) == rep);
}

TEST_CASE("torsion report round trip covers the null branches") {
  // Three-torsion origin: infinity statuses, degenerate continued fraction,
  // underdetermined-free but zero-t Somos fit.
  CurveReport rep = verify_conjectures(Curve{0, 1, 0, 0, 0}, 8);
  CHECK(rep.pass);
  CHECK(rep.conjecture3.degenerate);
  nlohmann::json j = to_json(rep);
  CHECK(curve_report_from_json(nlohmann::json::parse(j.dump())) == rep);
}

TEST_CASE("sweep report json round trip") {
  SweepConfig config;
  config.seed = 5;
  config.bound = 3;
  config.count = 4;
  config.depth = 6;
  config.threads = 2;
  SweepReport rep = sweep(config);
  nlohmann::json j = to_json(rep);
  CHECK(j["seed"].get<std::uint64_t>() == 5);
  CHECK(j["curves"].size() == 4);
  CHECK(sweep_report_from_json(nlohmann::json::parse(j.dump())) == rep);
}

TEST_CASE("text rendering") {
  CurveReport rep = verify_conjectures(Curve{2, 5, 4, 9, 0}, 8);
  std::string text = render_text(rep);
  CHECK(text.find("y^2 + 2xy + 5y = x^3 + 4x^2 + 9x") != std::string::npos);
  CHECK(text.find("discriminant: -38091") != std::string::npos);
  CHECK(text.find("conjecture 1 (scaled Hankel vs division values): PASS") !=
        std::string::npos);
  CHECK(text.find("conjecture 2 (Hankel coordinates vs group law): PASS") !=
        std::string::npos);
  CHECK(text.find("conjecture 3 (continued-fraction routes): PASS") !=
        std::string::npos);
  CHECK(text.find("expected (25, 71), fitted (25, 71)") != std::string::npos);
  CHECK(text.find("result: PASS") != std::string::npos);

  SweepConfig config;
  config.seed = 5;
  config.bound = 3;
  config.count = 4;
  config.depth = 6;
  config.threads = 2;
  SweepReport srep = sweep(config);
  std::string stext = render_text(srep);
  CHECK(stext.find("4/4") != std::string::npos);
  CHECK(stext.find("PASS") != std::string::npos);
}

TEST_CASE("rationals serialize as exact strings") {
  CurveReport rep = verify_conjectures(Curve{2, 5, 4, 9, 0}, 8);
  nlohmann::json j = to_json(rep);
  // x(2P) = 71/25 appears in the conjecture-2 table as a p/q string.
  bool found = false;
  for (const auto& pt : j["conjecture2"]["points"]) {
    if (!pt["x"].is_null() && pt["x"].get<std::string>() == "71/25")
      found = true;
  }
  CHECK(found);
}
