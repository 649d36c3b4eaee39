#pragma once

#include <optional>
#include <string_view>

#include "repseq/rational.hpp"

namespace repseq {

// Sets of exponents (rationals >= 1) that decide whether a repetition counts.
// A string belongs to a domain when at least one of its exponents does.
enum class ExponentDomain {
  NonInteger,       // Q+ \ N
  Periodic,         // [2, inf)
  Even,             // 2N
  TwoThreeOrFourUp, // (2,3] u [4,inf)
  ThreeFourBands,   // union over x in N of (3x, 4x)
  AnyRepetition,    // (1, inf)
  SquareToCube,     // [2,3]: strings of the form U U U' with U' a prefix of U
  CubeToQuartic,    // [3,4): strings U U U U' with U' a proper prefix of U
};

bool contains(ExponentDomain d, const ExactRational& r) noexcept;

std::string_view domain_name(ExponentDomain d) noexcept;

// Inverse of domain_name.
std::optional<ExponentDomain> parse_domain(std::string_view name) noexcept;

}  // namespace repseq
