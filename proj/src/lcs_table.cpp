#include "repseq/lcs_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace repseq {

void LcsTable::assign(std::span<const std::string_view> strings) {
  if (strings.size() < 2 || strings.size() > kMaxArity)
    throw std::invalid_argument("lcs_table: arity must be 2, 3 or 4");
  arity_ = strings.size();
  std::size_t total = 1;
  for (std::size_t j = arity_; j-- > 0;) {
    strings_[j] = strings[j];
    extent_[j] = strings[j].size() + 1;
    stride_[j] = total;
    total *= extent_[j];
  }
  for (std::size_t j = arity_; j < kMaxArity; ++j) {
    strings_[j] = {};
    extent_[j] = 1;
    stride_[j] = 0;
  }
  cells_.assign(total, 0);

  // Row-major sweep; every predecessor of a cell has a smaller offset.
  Index idx{};
  for (std::size_t o = 0; o < total; ++o) {
    bool interior = true;
    for (std::size_t j = 0; j < arity_; ++j) interior = interior && idx[j] > 0;
    if (interior) {
      const char c = strings_[0][idx[0] - 1];
      bool all_equal = true;
      for (std::size_t j = 1; j < arity_; ++j) all_equal = all_equal && strings_[j][idx[j] - 1] == c;
      if (all_equal) {
        std::size_t diag = o;
        for (std::size_t j = 0; j < arity_; ++j) diag -= stride_[j];
        cells_[o] = cells_[diag] + 1;
      } else {
        Cell best = 0;
        for (std::size_t j = 0; j < arity_; ++j) best = std::max(best, cells_[o - stride_[j]]);
        cells_[o] = best;
      }
    }
    for (std::size_t j = arity_; j-- > 0;) {
      if (++idx[j] < extent_[j]) break;
      idx[j] = 0;
    }
  }
}

Cell LcsTable::corner() const noexcept {
  Index idx{};
  for (std::size_t j = 0; j < arity_; ++j) idx[j] = extent_[j] - 1;
  return at(idx);
}

std::vector<LcsTable::Index> LcsTable::trace(Index idx) const {
  std::vector<Index> out;
  out.reserve(at(idx));
  while (at(idx) > 0) {
    const char c = strings_[0][idx[0] - 1];
    bool all_equal = true;
    for (std::size_t j = 1; j < arity_; ++j) all_equal = all_equal && strings_[j][idx[j] - 1] == c;
    if (all_equal) {
      out.push_back(idx);
      for (std::size_t j = 0; j < arity_; ++j) --idx[j];
      continue;
    }
    const Cell v = at(idx);
    for (std::size_t j = 0; j < arity_; ++j) {
      Index prev = idx;
      --prev[j];
      if (at(prev) == v) {
        idx = prev;
        break;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool LcsTable::dims_match(std::span<const std::string_view> strings) const noexcept {
  if (strings.size() != arity_) return false;
  for (std::size_t j = 0; j < arity_; ++j)
    if (strings[j].size() + 1 != extent_[j]) return false;
  return true;
}

}  // namespace repseq
