#include "repseq/witness.hpp"

#include <stdexcept>

#include "repseq/period.hpp"

namespace repseq {

std::string_view source_name(SourceMode m) noexcept {
  switch (m) {
    case SourceMode::NonInteger: return "nonint";
    case SourceMode::D3: return "d3";
    case SourceMode::D4: return "d4";
    case SourceMode::Periodic: return "periodic";
    case SourceMode::Square: return "square";
    case SourceMode::AnyRepetition: return "any";
    case SourceMode::Oracle: return "oracle";
  }
  return "?";
}

RepetitionWitness make_witness(std::string_view text, std::vector<std::size_t> positions, ExponentDomain domain,
                               SourceMode source, std::optional<Factorization> cuts) {
  RepetitionWitness w;
  w.length = positions.size();
  w.content.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const auto p = positions[i];
    if (p == 0 || p > text.size() || (i > 0 && positions[i - 1] >= p))
      throw std::logic_error("make_witness: positions are not a strictly increasing sequence into the text");
    w.content.push_back(text[p - 1]);
  }
  w.positions = std::move(positions);
  w.source = source;
  w.factor_cuts = cuts;
  if (w.content.empty()) throw std::logic_error("make_witness: empty witness");
  const auto prof = profile(w.content);
  w.min_period = prof.min_period;
  w.max_exponent = prof.max_exponent;
  const auto e = domain_exponent(w.content, domain);
  if (!e) throw std::logic_error("make_witness: '" + w.content + "' has no exponent in " +
                                 std::string(domain_name(domain)));
  w.domain_exponent = *e;
  return w;
}

std::string check_witness(const RepetitionWitness& w, std::string_view text, ExponentDomain domain) {
  if (w.positions.size() != w.length) return "position count differs from length";
  if (w.content.size() != w.length) return "content size differs from length";
  for (std::size_t i = 0; i < w.positions.size(); ++i) {
    const auto p = w.positions[i];
    if (p == 0 || p > text.size()) return "position out of range";
    if (i > 0 && w.positions[i - 1] >= p) return "positions not strictly increasing";
    if (text[p - 1] != w.content[i]) return "content does not match text";
  }
  if (w.length == 0) return "empty witness";
  const auto ps = periods(w.content);
  if (ps.front() != w.min_period) return "min period is wrong";
  if (w.max_exponent != ExactRational(w.length, w.min_period)) return "max exponent is wrong";
  bool listed = false;
  for (auto p : ps) listed = listed || ExactRational(w.length, p) == w.domain_exponent;
  if (!listed) return "domain exponent is not an exponent of the content";
  if (!contains(domain, w.domain_exponent)) return "domain exponent outside the domain";
  return {};
}

}  // namespace repseq
