#include "repseq/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "repseq/errors.hpp"
#include "repseq/period.hpp"

namespace repseq {

namespace {

// For masks of equal popcount: a's position sequence is lexicographically
// smaller iff a holds the lowest bit where the two differ.
bool lex_smaller(std::uint32_t a, std::uint32_t b) noexcept {
  const auto diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

}  // namespace

RepetitionResult oracle_longest(std::string_view text, ExponentDomain domain, std::size_t limit) {
  if (limit > kOracleLimit)
    throw std::invalid_argument("oracle limit may not exceed " + std::to_string(kOracleLimit));
  if (text.size() > limit) throw GuardError("oracle", text.size(), limit);

  const std::uint32_t end = std::uint32_t{1} << text.size();
  std::uint32_t best_mask = 0;
  int best_len = 0;
  std::string content;
  content.reserve(text.size());
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const int len = std::popcount(mask);
    if (len < best_len || (len == best_len && !lex_smaller(mask, best_mask))) continue;
    content.clear();
    for (auto m = mask; m != 0; m &= m - 1) content.push_back(text[std::countr_zero(m)]);
    if (!in_domain(content, domain)) continue;
    best_mask = mask;
    best_len = len;
  }

  RepetitionResult r;
  r.length = static_cast<std::size_t>(best_len);
  if (best_len == 0) return r;
  std::vector<std::size_t> positions;
  for (auto m = best_mask; m != 0; m &= m - 1) positions.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
  r.witness = make_witness(text, std::move(positions), domain, SourceMode::Oracle);
  return r;
}

}  // namespace repseq
