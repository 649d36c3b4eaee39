#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "repseq/dp_tables.hpp"
#include "repseq/domain.hpp"
#include "repseq/witness.hpp"

namespace repseq {

// Default input-length limits; exceeding one raises GuardError unless
// DriverOptions::max_n overrides it.
inline constexpr std::size_t kNonIntegerLimit = 2000;
inline constexpr std::size_t kThreeFactorLimit = 120;
inline constexpr std::size_t kFourFactorLimit = 40;

struct DriverOptions {
  bool reconstruct = false;
  D2Gate gate = D2Gate::Corrected;  // only consulted by drivers built on D2
  unsigned threads = 1;             // 0 picks std::thread::hardware_concurrency()
  std::optional<std::size_t> max_n;
};

// Longest subsequence with a non-integer exponent (some period q with
// |S|/2 < q < |S|). Maximizes the two-factor table over every cut T = YZ.
RepetitionResult d2_driver(std::string_view text, const DriverOptions& opts = {});

// Longest subsequence U U U' with U' a prefix of U (cubes included), i.e.
// some exponent in [2,3]. Maximizes over every cut T = XYZ, Z possibly empty.
RepetitionResult d3_driver(std::string_view text, const DriverOptions& opts = {});

// Longest subsequence U U U U' with U' a proper prefix of U, i.e. some
// exponent in [3,4). Maximizes over every cut T = WXYZ, Z possibly empty.
RepetitionResult d4_driver(std::string_view text, const DriverOptions& opts = {});

// Longest subsequence with exponent >= 2: the better of d3_driver and
// d4_driver, preferring d3 on ties.
RepetitionResult longest_periodic(std::string_view text, const DriverOptions& opts = {});

// Longest square V V: max over cuts of 2 * LCS(T[1..b], T[b+1..n]).
RepetitionResult longest_square(std::string_view text, const DriverOptions& opts = {});

// Longest subsequence with an exponent > 1: the better of d2_driver and
// longest_square, preferring d2 on ties.
RepetitionResult longest_any_repetition(std::string_view text, const DriverOptions& opts = {});

// Domain a driver's witnesses are guaranteed to lie in.
ExponentDomain witness_domain(SourceMode mode) noexcept;

// Input-length limit applied by a driver with default options.
std::size_t default_limit(SourceMode mode) noexcept;

}  // namespace repseq
