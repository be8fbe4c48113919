// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDSFORGE_SEQUENCE_HPP_
#define EDSFORGE_SEQUENCE_HPP_

#include <cstddef>
#include <vector>

#include "edsforge/rational.hpp"

namespace edsforge {

// A finite run of sequence terms starting at an arbitrary index.
struct Sequence {
  long long offset = 0;
  std::vector<Rational> terms;

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

// Terms whose absolute index (offset + position) has the given parity.
// The result is reindexed: absolute index 2m + parity becomes position m.
Sequence bisect(const Sequence& s, int parity);

std::vector<Rational> head(const std::vector<Rational>& v, std::size_t n);

}  // namespace edsforge

#endif  // EDSFORGE_SEQUENCE_HPP_
