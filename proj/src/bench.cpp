#include "repseq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

namespace repseq {

namespace {

char symbol(std::uint64_t index) { return static_cast<char>(static_cast<unsigned char>('a' + index)); }

std::string planted(std::size_t n, unsigned sigma, SplitMix64& rng) {
  std::string out(n, 'a');
  for (auto& c : out) c = symbol(rng.below(sigma));
  if (n < 2) return out;
  // Plant a string of period p and length m in [2p..n] at sorted random
  // positions; the rest stays noise.
  const std::size_t p = 1 + rng.below(std::max<std::size_t>(1, n / 4));
  const std::size_t m = 2 * p + rng.below(n - 2 * p + 1);
  std::string root(p, 'a');
  for (auto& c : root) c = symbol(rng.below(sigma));
  // Selection sampling picks m of the n slots in order.
  std::size_t chosen = 0;
  for (std::size_t i = 0; i < n && chosen < m; ++i) {
    if (rng.below(n - i) < m - chosen) {
      out[i] = root[chosen % p];
      ++chosen;
    }
  }
  return out;
}

}  // namespace

std::optional<StringKind> parse_string_kind(std::string_view name) noexcept {
  if (name == "random") return StringKind::Random;
  if (name == "unary") return StringKind::Unary;
  if (name == "periodic-planted") return StringKind::PeriodicPlanted;
  return std::nullopt;
}

std::string gen_string(StringKind kind, std::size_t n, unsigned sigma, std::uint64_t seed) {
  if (sigma < 1 || sigma > 256) throw std::invalid_argument("alphabet size must be in [1..256]");
  SplitMix64 rng(seed);
  switch (kind) {
    case StringKind::Unary:
      return std::string(n, symbol(0));
    case StringKind::Random: {
      std::string out(n, 'a');
      for (auto& c : out) c = symbol(rng.below(sigma));
      return out;
    }
    case StringKind::PeriodicPlanted:
      return planted(n, sigma, rng);
  }
  return {};
}

std::uint64_t bench_seed(std::uint64_t seed, std::size_t n, std::size_t rep) noexcept {
  SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(n) * 0xD1B54A32D192ED03ULL));
  for (std::size_t i = 0; i < rep; ++i) rng.next();
  return rng.next();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::max(y[i], 1.0));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("slope needs distinct sizes");
  return (k * sxy - sx * sy) / denom;
}

ScalingReport run_scaling(const ScalingConfig& cfg, const Solver& solve) {
  if (cfg.sizes.empty() || cfg.reps == 0) throw std::invalid_argument("bench needs sizes and reps >= 1");
  if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end()))
    throw std::invalid_argument("bench sizes must be ascending");

  ScalingReport report;
  std::vector<double> xs, medians;
  for (auto n : cfg.sizes) {
    // Warm-up on the first repetition's input.
    solve(gen_string(cfg.kind, n, cfg.sigma, bench_seed(cfg.seed, n, 0)));
    std::vector<double> times;
    for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
      const auto text = gen_string(cfg.kind, n, cfg.sigma, bench_seed(cfg.seed, n, rep));
      const auto t0 = std::chrono::steady_clock::now();
      const auto length = solve(text);
      const auto t1 = std::chrono::steady_clock::now();
      const auto nanos =
          static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      report.rows.push_back({cfg.mode, n, cfg.sigma, cfg.seed, rep, nanos, length});
      times.push_back(static_cast<double>(nanos));
    }
    std::sort(times.begin(), times.end());
    const auto mid = times.size() / 2;
    medians.push_back(times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2);
    xs.push_back(static_cast<double>(n));
  }
  // Duplicate sizes would make the fit degenerate; a single size has no slope.
  std::map<double, double> by_size;
  for (std::size_t i = 0; i < xs.size(); ++i) by_size[xs[i]] = medians[i];
  if (by_size.size() >= 2) {
    std::vector<double> ux, uy;
    for (auto [x, y] : by_size) {
      ux.push_back(x);
      uy.push_back(y);
    }
    report.slope = loglog_slope(ux, uy);
  }
  return report;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& rows, unsigned threads) {
  os << "mode,n,sigma,seed,rep,nanos,length";
  if (threads > 0) os << ",threads";
  os << '\n';
  for (const auto& r : rows) {
    os << r.mode << ',' << r.n << ',' << r.sigma << ',' << r.seed << ',' << r.rep << ',' << r.nanos << ','
       << r.length;
    if (threads > 0) os << ',' << threads;
    os << '\n';
  }
}

}  // namespace repseq
