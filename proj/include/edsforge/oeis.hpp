// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0
//
// OEIS b-file access (bundled fixtures, a local cache, and an optional
// network fallback) plus sequence cross-checking.

#ifndef EDSFORGE_OEIS_HPP_
#define EDSFORGE_OEIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edsforge/rational.hpp"

namespace edsforge {

struct OeisRecord {
  std::string id;  // "A000045"
  long long offset = 0;
  std::vector<Int> terms;

  friend bool operator==(const OeisRecord&, const OeisRecord&) = default;
};

// b-file text: "index value" lines, '#' comments, consecutive indices.
OeisRecord parse_bfile(const std::string& id, const std::string& text);
std::string format_bfile(const OeisRecord& rec);

// Raw b-file text shipped with the library, when the id is bundled.
std::optional<std::string_view> bundled_bfile(const std::string& id);
std::vector<std::string> bundled_ids();

// EDSFORGE_CACHE_DIR, else ~/.cache/edsforge.
std::string default_cache_dir();

class OeisClient {
 public:
  explicit OeisClient(bool offline = true, std::string cache_dir = "");

  // Bundled fixture, then cache, then (if online) the b-file endpoint.
  // Throws ParseError for a malformed id, NetworkDisabled when only the
  // network could answer but offline mode is on, NotFound when the network
  // has no such sequence.
  OeisRecord fetch(const std::string& id);

  bool offline() const { return offline_; }
  const std::string& cache_dir() const { return cache_dir_; }

 private:
  bool offline_;
  std::string cache_dir_;
};

enum class SignRule {
  none,
  // Expected term at position n is multiplied by (-1)^binomial(n,2): the
  // sign pattern + + - - + + - -.
  alternate_pairs,
};

struct CrossCheck {
  std::size_t compared = 0;
  std::optional<std::size_t> first_mismatch;

  bool all_matched() const { return compared > 0 && !first_mismatch; }
};

// computed[n] is compared against rec(n + shift) under the sign rule, for as
// many positions as the record covers.
CrossCheck cross_check(const std::vector<Rational>& computed,
                       const OeisRecord& rec, long long shift, SignRule rule);

struct NamedCheck {
  std::string name;
  std::string oeis_id;
  bool pass = false;
  std::size_t compared = 0;
  std::optional<std::size_t> first_mismatch;
};

// The full battery tying pipeline output to the bundled sequences. Covers
// every bundled id; works entirely offline.
std::vector<NamedCheck> standard_cross_checks(OeisClient& client);

}  // namespace edsforge

#endif  // EDSFORGE_OEIS_HPP_
