#include "repseq/domain.hpp"

#include <array>
#include <utility>

namespace repseq {

namespace {

constexpr std::array<std::pair<ExponentDomain, std::string_view>, 8> kNames{{
    {ExponentDomain::NonInteger, "non-integer"},
    {ExponentDomain::Periodic, "periodic"},
    {ExponentDomain::Even, "even"},
    {ExponentDomain::TwoThreeOrFourUp, "two-three-or-four-up"},
    {ExponentDomain::ThreeFourBands, "three-four-bands"},
    {ExponentDomain::AnyRepetition, "any-repetition"},
    {ExponentDomain::SquareToCube, "square-to-cube"},
    {ExponentDomain::CubeToQuartic, "cube-to-quartic"},
}};

bool in_three_four_band(const ExactRational& r) noexcept {
  // Smallest integer x with 4x > r, then test 3x < r. Larger x only move the
  // band's lower end further right, so this x is the only candidate.
  const auto x = r.num() / (4 * r.den()) + 1;
  return r.compare(3 * x) == std::strong_ordering::greater;
}

}  // namespace

bool contains(ExponentDomain d, const ExactRational& r) noexcept {
  using std::strong_ordering;
  switch (d) {
    case ExponentDomain::NonInteger:
      return !r.is_integer();
    case ExponentDomain::Periodic:
      return r.compare(2) != strong_ordering::less;
    case ExponentDomain::Even:
      return r.is_integer() && r.num() % 2 == 0;
    case ExponentDomain::TwoThreeOrFourUp:
      return (r.compare(2) == strong_ordering::greater && r.compare(3) != strong_ordering::greater) ||
             r.compare(4) != strong_ordering::less;
    case ExponentDomain::ThreeFourBands:
      return in_three_four_band(r);
    case ExponentDomain::AnyRepetition:
      return r.compare(1) == strong_ordering::greater;
    case ExponentDomain::SquareToCube:
      return r.compare(2) != strong_ordering::less && r.compare(3) != strong_ordering::greater;
    case ExponentDomain::CubeToQuartic:
      return r.compare(3) != strong_ordering::less && r.compare(4) == strong_ordering::less;
  }
  return false;
}

std::string_view domain_name(ExponentDomain d) noexcept {
  for (const auto& [dom, name] : kNames)
    if (dom == d) return name;
  return "?";
}

std::optional<ExponentDomain> parse_domain(std::string_view name) noexcept {
  for (const auto& [dom, n] : kNames)
    if (n == name) return dom;
  return std::nullopt;
}

}  // namespace repseq
