// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "edsforge/errors.hpp"
#include "edsforge/oeis.hpp"
#include "test_util.hpp"

using namespace edsforge;

namespace {

std::filesystem::path fresh_temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("edsforge-test-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("b-file parsing") {
  OeisRecord rec = parse_bfile("A000001", "# comment\n0 1\n1 2\n\n2 35\n");
  CHECK(rec.id == "A000001");
  CHECK(rec.offset == 0);
  CHECK(rec.terms == std::vector<Int>{1, 2, 35});

  OeisRecord neg = parse_bfile("A000002", "3 -10\n4 -20\n");
  CHECK(neg.offset == 3);
  CHECK(neg.terms == std::vector<Int>{-10, -20});

  CHECK_THROWS_AS(parse_bfile("A000003", "0 1\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_bfile("A000003", "0 1 9\n"), ParseError);
  CHECK_THROWS_AS(parse_bfile("A000003", "zero 1\n"), ParseError);
  CHECK_THROWS_AS(parse_bfile("A000003", "0 one\n"), ParseError);
  CHECK_THROWS_AS(parse_bfile("A000003", "# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_bfile("A000003", ""), ParseError);
}

TEST_CASE("b-file formatting round trips") {
  OeisRecord rec;
  rec.id = "A123456";
  rec.offset = -2;
  rec.terms = {Int(5), Int(-7), Int(0), Int("123456789012345678901234567890")};
  std::string text = format_bfile(rec);
  CHECK(parse_bfile(rec.id, text) == rec);
}

TEST_CASE("bundled sequences") {
  std::vector<std::string> ids = bundled_ids();
  std::set<std::string> want{"A000045", "A000108", "A000129", "A006720",
                             "A006769", "A025262", "A056010", "A157003",
                             "A178072", "A178078", "A178079"};
  CHECK(std::set<std::string>(ids.begin(), ids.end()) == want);
  for (const std::string& id : ids) CHECK(bundled_bfile(id).has_value());
  CHECK_FALSE(bundled_bfile("A999999").has_value());

  OeisClient client(true);
  OeisRecord fib = client.fetch("A000045");
  CHECK(fib.offset == 0);
  REQUIRE(fib.terms.size() >= 6);
  CHECK(std::vector<Int>(fib.terms.begin(), fib.terms.begin() + 6) ==
        std::vector<Int>{0, 1, 1, 2, 3, 5});

  OeisRecord shifted = client.fetch("A025262");
  CHECK(shifted.offset == 1);
  CHECK(shifted.terms.front() == 1);

  OeisRecord somos = client.fetch("A006720");
  CHECK(somos.offset == 0);
  CHECK(std::vector<Int>(somos.terms.begin(), somos.terms.begin() + 8) ==
        std::vector<Int>{1, 1, 1, 1, 2, 3, 7, 23});
}

TEST_CASE("offline client refuses the network but rejects bad ids first") {
  OeisClient client(true, fresh_temp_dir("offline").string());
  CHECK_THROWS_AS(client.fetch("A999998"), NetworkDisabled);
  CHECK_THROWS_AS(client.fetch("bogus"), ParseError);
  CHECK_THROWS_AS(client.fetch("A99999"), ParseError);
  CHECK_THROWS_AS(client.fetch("a000045"), ParseError);
}

TEST_CASE("cache round trip") {
  auto dir = fresh_temp_dir("cache");
  OeisRecord rec;
  rec.id = "A999998";
  rec.offset = 4;
  rec.terms = {Int(11), Int(22), Int(33)};
  {
    std::ofstream out(dir / "A999998.txt");
    out << format_bfile(rec);
  }
  OeisClient client(true, dir.string());
  CHECK(client.cache_dir() == dir.string());
  CHECK(client.fetch("A999998") == rec);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory resolution") {
  auto dir = fresh_temp_dir("envcache");
  ::setenv("EDSFORGE_CACHE_DIR", dir.string().c_str(), 1);
  CHECK(default_cache_dir() == dir.string());
  ::unsetenv("EDSFORGE_CACHE_DIR");
  CHECK(default_cache_dir() != dir.string());
  std::filesystem::remove_all(dir);
}

TEST_CASE("cross check shifts and sign rules") {
  OeisRecord rec;
  rec.id = "A000000";
  rec.offset = 1;
  rec.terms = {Int(1), Int(2), Int(3), Int(4), Int(5), Int(6)};

  // computed[n] vs rec at n + shift.
  std::vector<Rational> plain{2, 3, 4, 5};
  CrossCheck cc = cross_check(plain, rec, 2, SignRule::none);
  CHECK(cc.compared == 4);
  CHECK(cc.all_matched());

  // Positions before the record's range are skipped, not failed.
  std::vector<Rational> early{0, 1, 2, 3};
  CrossCheck head = cross_check(early, rec, 0, SignRule::none);
  CHECK(head.compared == 3);
  CHECK(head.all_matched());

  std::vector<Rational> wrong{2, 3, 9, 5};
  CrossCheck bad = cross_check(wrong, rec, 2, SignRule::none);
  CHECK_FALSE(bad.all_matched());
  CHECK(bad.first_mismatch == 2);

  // (-1)^C(n,2): + + - - + +, applied to the expected record values.
  std::vector<Rational> signed_terms{1, 2, -3, -4, 5, 6};
  CrossCheck sg =
      cross_check(signed_terms, rec, 1, SignRule::alternate_pairs);
  CHECK(sg.compared == 6);
  CHECK(sg.all_matched());

  CHECK_FALSE(cross_check({}, rec, 0, SignRule::none).all_matched());
}

TEST_CASE("standard cross checks pass offline and cover every bundled id") {
  OeisClient client(true);
  std::vector<NamedCheck> checks = standard_cross_checks(client);
  CHECK(checks.size() == 13);
  std::set<std::string> used;
  for (const NamedCheck& c : checks) {
    INFO(c.name << " vs " << c.oeis_id);
    CHECK(c.pass);
    CHECK(c.compared >= 8);
    used.insert(c.oeis_id);
  }
  std::vector<std::string> ids = bundled_ids();
  CHECK(used == std::set<std::string>(ids.begin(), ids.end()));
}
