#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repseq/domain.hpp"
#include "repseq/factorization.hpp"
#include "repseq/rational.hpp"

namespace repseq {

enum class SourceMode { NonInteger, D3, D4, Periodic, Square, AnyRepetition, Oracle };

std::string_view source_name(SourceMode m) noexcept;

struct RepetitionWitness {
  std::size_t length = 0;
  std::vector<std::size_t> positions;  // 1-based, strictly increasing
  std::string content;
  std::size_t min_period = 0;
  ExactRational max_exponent{1, 1};
  ExactRational domain_exponent{1, 1};
  SourceMode source = SourceMode::Oracle;
  std::optional<Factorization> factor_cuts;
};

struct RepetitionResult {
  std::size_t length = 0;
  std::optional<RepetitionWitness> witness;
};

// Builds the witness record for positions into text. Throws std::logic_error
// if the positions are not strictly increasing or the content has no
// exponent in the domain.
RepetitionWitness make_witness(std::string_view text, std::vector<std::size_t> positions, ExponentDomain domain,
                               SourceMode source, std::optional<Factorization> cuts = std::nullopt);

// Re-checks every witness invariant from scratch; empty string when valid,
// otherwise a description of the first violation.
std::string check_witness(const RepetitionWitness& w, std::string_view text, ExponentDomain domain);

}  // namespace repseq
