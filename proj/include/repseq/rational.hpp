#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace repseq {

// Reduced fraction num/den with den > 0. Exponents are always >= 1, but the
// type itself only requires a positive numerator and denominator.
class ExactRational {
public:
  constexpr ExactRational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (num == 0 || den == 0) throw std::invalid_argument("ExactRational: zero component");
    const auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  constexpr std::uint64_t num() const noexcept { return num_; }
  constexpr std::uint64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  constexpr bool operator==(const ExactRational&) const noexcept = default;
  constexpr std::strong_ordering operator<=>(const ExactRational& o) const noexcept {
    const auto lhs = static_cast<unsigned __int128>(num_) * o.den_;
    const auto rhs = static_cast<unsigned __int128>(o.num_) * den_;
    return lhs <=> rhs;
  }

  // Compares against an integer without building a rational.
  constexpr std::strong_ordering compare(std::uint64_t k) const noexcept {
    return static_cast<unsigned __int128>(num_) <=> static_cast<unsigned __int128>(k) * den_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
  std::uint64_t num_;
  std::uint64_t den_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

}  // namespace repseq
