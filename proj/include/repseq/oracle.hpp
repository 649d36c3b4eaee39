#pragma once

#include <cstddef>
#include <string_view>

#include "repseq/domain.hpp"
#include "repseq/witness.hpp"

namespace repseq {

inline constexpr std::size_t kOracleLimit = 22;

// Exhaustive search over all non-empty subsequences (position masks, low bit
// = position 1, visited in increasing numeric order). Returns a longest one
// lying in the domain; among equally long ones, the lexicographically
// smallest position sequence. Throws GuardError when |T| > limit, and
// std::invalid_argument when limit exceeds kOracleLimit.
RepetitionResult oracle_longest(std::string_view text, ExponentDomain domain, std::size_t limit = kOracleLimit);

}  // namespace repseq
