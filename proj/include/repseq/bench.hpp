#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace repseq {

// SplitMix64 (Steele, Lea, Flood 2014). The generator behind every corpus;
// fixed so that other implementations can regenerate identical inputs.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Multiply-shift reduction of next() into [0, bound).
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Independent child stream; parent advances by one draw.
  constexpr SplitMix64 split() noexcept { return SplitMix64(next()); }

private:
  std::uint64_t state_;
};

enum class StringKind { Random, Unary, PeriodicPlanted };

std::optional<StringKind> parse_string_kind(std::string_view name) noexcept;

// Symbols are the sigma consecutive byte values starting at 'a' (wrapping
// past 0xff). Throws std::invalid_argument for sigma outside [1..256].
std::string gen_string(StringKind kind, std::size_t n, unsigned sigma, std::uint64_t seed);

// Seed for repetition rep at size n of a bench run seeded with seed.
std::uint64_t bench_seed(std::uint64_t seed, std::size_t n, std::size_t rep) noexcept;

struct BenchRecord {
  std::string mode;
  std::size_t n = 0;
  unsigned sigma = 0;
  std::uint64_t seed = 0;
  std::size_t rep = 0;
  std::uint64_t nanos = 0;
  std::size_t length = 0;
};

struct ScalingConfig {
  std::string mode;
  std::vector<std::size_t> sizes;  // ascending
  unsigned sigma = 2;
  std::uint64_t seed = 0;
  std::size_t reps = 3;
  StringKind kind = StringKind::Random;
};

struct ScalingReport {
  std::vector<BenchRecord> rows;
  double slope = 0.0;  // least squares of log(median nanos) on log(n)
};

// Solver under measurement: returns the reported length for one input.
using Solver = std::function<std::size_t(std::string_view)>;

// One untimed warm-up call per size, then reps timed calls in (n, rep) order.
ScalingReport run_scaling(const ScalingConfig& cfg, const Solver& solve);

// Least-squares slope of log(y) on log(x); needs >= 2 distinct x values.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Writes the header and rows. threads > 0 appends a "threads" column.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& rows, unsigned threads = 0);

}  // namespace repseq
