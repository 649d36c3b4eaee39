#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "repseq/domain.hpp"
#include "repseq/rational.hpp"

namespace repseq {

// Period structure of a non-empty string S: every p in [1..|S|] with
// S[i] = S[i+p] wherever both sides exist, and the exponents |S|/p.
struct PeriodProfile {
  std::size_t length = 0;
  std::vector<std::size_t> periods;     // ascending; always ends with length
  std::size_t min_period = 0;
  std::vector<ExactRational> exponents; // same order as periods (descending value)
  ExactRational max_exponent{1, 1};
};

enum class Classification { Periodic, SubPeriodic, Neither };

std::string_view classification_name(Classification c) noexcept;

// Failure function: border[i] is the length of the longest proper border of
// S[0..i]. Works on the empty string too.
std::vector<std::size_t> border_array(std::string_view s);

// Direct sliding-equality definition, O(|S|^2). Empty for the empty string.
std::vector<std::size_t> periods(std::string_view s);

// Periods read off the border chain, O(|S|). Same result as periods().
std::vector<std::size_t> periods_via_borders(std::string_view s);

// |S| minus the longest proper border. Throws std::domain_error on empty input.
std::size_t min_period(std::string_view s);

ExactRational max_exponent(std::string_view s);

PeriodProfile profile(std::string_view s);

Classification classify(std::string_view s);

// Largest exponent of s inside d, if any. s must be non-empty.
std::optional<ExactRational> domain_exponent(std::string_view s, ExponentDomain d);

bool in_domain(std::string_view s, ExponentDomain d);

}  // namespace repseq
