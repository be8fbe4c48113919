// Copyright 2026 edsforge contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef EDSFORGE_ERRORS_HPP_
#define EDSFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace edsforge {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Series arithmetic.
struct DivisionByZeroSeries : Error { using Error::Error; };
struct NonSquareConstantTerm : Error { using Error::Error; };
struct CompositionConstantTerm : Error { using Error::Error; };
struct RevertConstantTerm : Error { using Error::Error; };
struct PrefixTooLong : Error { using Error::Error; };

// Hankel / continued fractions / Somos fitting.
struct InsufficientTerms : Error { using Error::Error; };
struct InsufficientDepth : Error { using Error::Error; };
struct ZeroHankelPivot : Error { using Error::Error; };
struct ZeroScaleBase : Error { using Error::Error; };

// Curves and points.
struct SingularOperation : Error { using Error::Error; };
struct NonIntegerTranslation : Error { using Error::Error; };
struct PointAtInfinityEncountered : Error { using Error::Error; };
struct ZeroXCoordinate : Error { using Error::Error; };

// Pipeline.
struct BranchResolutionFailed : Error { using Error::Error; };

// Input and lookups.
struct ParseError : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct NetworkDisabled : Error { using Error::Error; };

}  // namespace edsforge

#endif  // EDSFORGE_ERRORS_HPP_
