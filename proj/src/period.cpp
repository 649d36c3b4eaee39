#include "repseq/period.hpp"

#include <cassert>
#include <stdexcept>

namespace repseq {

namespace {

void require_non_empty(std::string_view s, const char* what) {
  if (s.empty()) throw std::domain_error(std::string(what) + ": undefined for the empty string");
}

}  // namespace

std::string_view classification_name(Classification c) noexcept {
  switch (c) {
    case Classification::Periodic: return "periodic";
    case Classification::SubPeriodic: return "sub-periodic";
    case Classification::Neither: return "neither";
  }
  return "?";
}

std::vector<std::size_t> border_array(std::string_view s) {
  std::vector<std::size_t> border(s.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border;
}

std::vector<std::size_t> periods(std::string_view s) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= s.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + p < s.size(); ++i) ok = s[i] == s[i + p];
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> periods_via_borders(std::string_view s) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  const auto border = border_array(s);
  const auto n = s.size();
  for (std::size_t b = border[n - 1]; b > 0; b = border[b - 1]) out.push_back(n - b);
  out.push_back(n);
  return out;
}

std::size_t min_period(std::string_view s) {
  require_non_empty(s, "min_period");
  const auto p = s.size() - border_array(s).back();
#ifndef NDEBUG
  assert(p == periods(s).front());
#endif
  return p;
}

ExactRational max_exponent(std::string_view s) { return {s.size(), min_period(s)}; }

PeriodProfile profile(std::string_view s) {
  require_non_empty(s, "profile");
  PeriodProfile prof;
  prof.length = s.size();
  prof.periods = periods_via_borders(s);
  prof.min_period = prof.periods.front();
  for (auto p : prof.periods) prof.exponents.emplace_back(s.size(), p);
  prof.max_exponent = prof.exponents.front();
  return prof;
}

Classification classify(std::string_view s) {
  const auto e = max_exponent(s);
  if (e.compare(2) != std::strong_ordering::less) return Classification::Periodic;
  if (e.compare(1) == std::strong_ordering::greater) return Classification::SubPeriodic;
  return Classification::Neither;
}

std::optional<ExactRational> domain_exponent(std::string_view s, ExponentDomain d) {
  require_non_empty(s, "domain_exponent");
  // periods_via_borders is ascending, so the first hit is the largest exponent.
  for (auto p : periods_via_borders(s)) {
    ExactRational e{s.size(), p};
    if (contains(d, e)) return e;
  }
  return std::nullopt;
}

bool in_domain(std::string_view s, ExponentDomain d) { return domain_exponent(s, d).has_value(); }

}  // namespace repseq
