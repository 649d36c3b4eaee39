#include "repseq/drivers.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "repseq/errors.hpp"

namespace repseq {

namespace {

struct BestCut {
  Cell value = 0;
  Factorization cut;
};

// Lexicographic order on the cut tuple.
bool earlier(const Factorization& a, const Factorization& b) noexcept {
  return std::lexicographical_compare(a.cuts.begin(), a.cuts.begin() + (a.k - 1), b.cuts.begin(),
                                      b.cuts.begin() + (b.k - 1));
}

void offer(BestCut& best, Cell value, const Factorization& f) {
  if (value > best.value || (value == best.value && value > 0 && earlier(f, best.cut))) {
    best.value = value;
    best.cut = f;
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls visit(f) for all factorizations into K factors with the given first
// cut, in lexicographic order of the remaining cuts. Every factor except the
// last is non-empty; the last is non-empty too unless last_may_be_empty.
template <std::size_t K, class Visit>
void for_each_cut(std::size_t n, std::size_t b1, bool last_may_be_empty, Visit&& visit) {
  Factorization f;
  f.k = K;
  f.n = n;
  f.cuts[0] = b1;
  const std::size_t last_cut = last_may_be_empty ? n : n - 1;
  if constexpr (K == 2) {
    visit(f);
  } else if constexpr (K == 3) {
    for (std::size_t b2 = b1 + 1; b2 <= last_cut; ++b2) {
      f.cuts[1] = b2;
      visit(f);
    }
  } else {
    static_assert(K == 4);
    for (std::size_t b2 = b1 + 1; b2 <= last_cut; ++b2) {
      f.cuts[1] = b2;
      for (std::size_t b3 = b2 + 1; b3 <= last_cut; ++b3) {
        f.cuts[2] = b3;
        visit(f);
      }
    }
  }
}

// Maximum of eval over all cuts; ties resolve to the lexicographically
// smallest cut regardless of how first cuts are distributed over threads.
template <std::size_t K, class Scratch, class Eval>
BestCut best_cut(std::size_t n, bool last_may_be_empty, unsigned threads, Eval eval) {
  const std::size_t last_cut = last_may_be_empty ? n : n - 1;
  if (n == 0 || last_cut < K - 1) return {};
  const std::size_t first_cuts = last_cut - (K - 2);  // b1 ranges over [1..first_cuts]

  std::atomic<std::size_t> next{1};
  auto work = [&](BestCut& best) {
    Scratch scratch;
    for (std::size_t b1; (b1 = next.fetch_add(1)) <= first_cuts;)
      for_each_cut<K>(n, b1, last_may_be_empty, [&](const Factorization& f) { offer(best, eval(f, scratch), f); });
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), first_cuts));
  std::vector<BestCut> partial(workers);
  if (workers <= 1) {
    work(partial[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back([&, t] { work(partial[t]); });
  }
  BestCut best;
  for (const auto& p : partial) offer(best, p.value, p.cut);
  return best;
}

void check_guard(std::string_view text, const DriverOptions& opts, std::size_t default_max, const char* name) {
  const auto limit = opts.max_n.value_or(default_max);
  if (text.size() > limit) throw GuardError(name, text.size(), limit);
}

void check_length(const std::vector<std::size_t>& positions, Cell value) {
  if (positions.size() != value)
    throw std::logic_error("traceback produced " + std::to_string(positions.size()) +
                           " positions for value " + std::to_string(value));
}

struct TwoFactorScratch {
  LcsTable lcs;
  DpTable2 table;
};

struct ThreeFactorScratch {
  LcsTable lcs;
  DpTable3 table;
};

struct FourFactorScratch {
  LcsTable lcs;
  DpTable4 table;
};

template <std::size_t K>
void assign_lcs(LcsTable& lcs, std::string_view text, const Factorization& f) {
  std::array<std::string_view, K> factors;
  for (std::size_t j = 0; j < K; ++j) factors[j] = f.factor(text, j);
  lcs.assign(factors);
}

Cell eval_d2(std::string_view text, const Factorization& f, TwoFactorScratch& s, D2Gate gate) {
  assign_lcs<2>(s.lcs, text, f);
  fill_d2(s.table, f.factor(text, 0), f.factor(text, 1), s.lcs, gate);
  return s.table.corner();
}

Cell eval_d3(std::string_view text, const Factorization& f, ThreeFactorScratch& s) {
  assign_lcs<3>(s.lcs, text, f);
  fill_d3(s.table, f.factor(text, 0), f.factor(text, 1), f.factor(text, 2), s.lcs);
  return std::max(s.table.corner(), 3 * s.lcs.corner());
}

Cell eval_d4(std::string_view text, const Factorization& f, FourFactorScratch& s) {
  assign_lcs<4>(s.lcs, text, f);
  fill_d4(s.table, f.factor(text, 0), f.factor(text, 1), f.factor(text, 2), f.factor(text, 3), s.lcs);
  return s.table.corner();
}

RepetitionResult finish(std::string_view text, const BestCut& best, std::vector<std::size_t> positions,
                        SourceMode mode) {
  RepetitionResult r;
  r.length = best.value;
  if (best.value == 0) return r;
  check_length(positions, best.value);
  r.witness = make_witness(text, std::move(positions), witness_domain(mode), mode, best.cut);
  return r;
}

// Re-labels a sub-driver's witness against the composite's domain.
RepetitionResult rebase(std::string_view text, RepetitionResult r, ExponentDomain domain) {
  if (r.witness)
    r.witness = make_witness(text, std::move(r.witness->positions), domain, r.witness->source,
                             r.witness->factor_cuts);
  return r;
}

}  // namespace

ExponentDomain witness_domain(SourceMode mode) noexcept {
  switch (mode) {
    case SourceMode::NonInteger: return ExponentDomain::NonInteger;
    case SourceMode::D3: return ExponentDomain::SquareToCube;
    case SourceMode::D4: return ExponentDomain::CubeToQuartic;
    case SourceMode::Periodic: return ExponentDomain::Periodic;
    case SourceMode::Square: return ExponentDomain::Even;
    case SourceMode::AnyRepetition: return ExponentDomain::AnyRepetition;
    case SourceMode::Oracle: break;
  }
  return ExponentDomain::AnyRepetition;
}

std::size_t default_limit(SourceMode mode) noexcept {
  switch (mode) {
    case SourceMode::NonInteger:
    case SourceMode::Square:
    case SourceMode::AnyRepetition: return kNonIntegerLimit;
    case SourceMode::D3: return kThreeFactorLimit;
    case SourceMode::D4:
    case SourceMode::Periodic: return kFourFactorLimit;
    case SourceMode::Oracle: break;
  }
  return 0;
}

RepetitionResult d2_driver(std::string_view text, const DriverOptions& opts) {
  check_guard(text, opts, kNonIntegerLimit, "nonint");
  const auto best = best_cut<2, TwoFactorScratch>(
      text.size(), false, opts.threads,
      [&](const Factorization& f, TwoFactorScratch& s) { return eval_d2(text, f, s, opts.gate); });
  if (!opts.reconstruct || best.value == 0) return {best.value, std::nullopt};
  TwoFactorScratch s;
  eval_d2(text, best.cut, s, opts.gate);
  return finish(text, best, traceback(s.table, s.lcs, best.cut, opts.gate), SourceMode::NonInteger);
}

RepetitionResult d3_driver(std::string_view text, const DriverOptions& opts) {
  check_guard(text, opts, kThreeFactorLimit, "d3");
  const auto best = best_cut<3, ThreeFactorScratch>(
      text.size(), true, opts.threads,
      [&](const Factorization& f, ThreeFactorScratch& s) { return eval_d3(text, f, s); });
  if (!opts.reconstruct || best.value == 0) return {best.value, std::nullopt};
  ThreeFactorScratch s;
  eval_d3(text, best.cut, s);
  // The table corner wins ties against the cube term.
  auto positions = s.table.corner() >= 3 * s.lcs.corner() ? traceback(s.table, s.lcs, best.cut)
                                                           : lcs_copies(s.lcs, best.cut);
  return finish(text, best, std::move(positions), SourceMode::D3);
}

RepetitionResult d4_driver(std::string_view text, const DriverOptions& opts) {
  check_guard(text, opts, kFourFactorLimit, "d4");
  const auto best = best_cut<4, FourFactorScratch>(
      text.size(), true, opts.threads,
      [&](const Factorization& f, FourFactorScratch& s) { return eval_d4(text, f, s); });
  if (!opts.reconstruct || best.value == 0) return {best.value, std::nullopt};
  FourFactorScratch s;
  eval_d4(text, best.cut, s);
  return finish(text, best, traceback(s.table, s.lcs, best.cut), SourceMode::D4);
}

RepetitionResult longest_periodic(std::string_view text, const DriverOptions& opts) {
  check_guard(text, opts, kFourFactorLimit, "periodic");
  auto three = d3_driver(text, opts);
  auto four = d4_driver(text, opts);
  return rebase(text, four.length > three.length ? std::move(four) : std::move(three), ExponentDomain::Periodic);
}

RepetitionResult longest_square(std::string_view text, const DriverOptions& opts) {
  check_guard(text, opts, kNonIntegerLimit, "square");
  auto eval = [&](const Factorization& f, LcsTable& lcs) {
    assign_lcs<2>(lcs, text, f);
    return 2 * lcs.corner();
  };
  const auto best = best_cut<2, LcsTable>(text.size(), false, opts.threads, eval);
  if (!opts.reconstruct || best.value == 0) return {best.value, std::nullopt};
  LcsTable lcs;
  eval(best.cut, lcs);
  return finish(text, best, lcs_copies(lcs, best.cut), SourceMode::Square);
}

RepetitionResult longest_any_repetition(std::string_view text, const DriverOptions& opts) {
  check_guard(text, opts, kNonIntegerLimit, "any");
  auto nonint = d2_driver(text, opts);
  auto square = longest_square(text, opts);
  return rebase(text, square.length > nonint.length ? std::move(square) : std::move(nonint),
                ExponentDomain::AnyRepetition);
}

}  // namespace repseq
