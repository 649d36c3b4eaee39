#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace repseq {

using Cell = std::uint32_t;

// Prefix table of longest-common-subsequence lengths for 2 to 4 strings.
// Cell (i_1, ..., i_k) holds |LCS(S_1[1..i_1], ..., S_k[1..i_k])|; index 0
// is the empty prefix in every coordinate.
class LcsTable {
public:
  static constexpr std::size_t kMaxArity = 4;
  using Index = std::array<std::size_t, kMaxArity>;

  LcsTable() = default;
  explicit LcsTable(std::span<const std::string_view> strings) { assign(strings); }

  // Rebuilds the table for new strings, reusing the allocation.
  void assign(std::span<const std::string_view> strings);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t extent(std::size_t j) const noexcept { return extent_[j]; }
  std::string_view string(std::size_t j) const noexcept { return strings_[j]; }

  Cell at(const Index& idx) const noexcept { return cells_[offset(idx)]; }
  Cell operator()(std::size_t a, std::size_t b) const noexcept { return cells_[a * stride_[0] + b * stride_[1]]; }
  Cell operator()(std::size_t a, std::size_t b, std::size_t c) const noexcept {
    return cells_[a * stride_[0] + b * stride_[1] + c * stride_[2]];
  }
  Cell operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const noexcept {
    return cells_[a * stride_[0] + b * stride_[1] + c * stride_[2] + d * stride_[3]];
  }

  Cell corner() const noexcept;

  // One common subsequence realizing at(idx), as a list of index tuples
  // (1-based within each string, ascending).
  std::vector<Index> trace(Index idx) const;

  bool dims_match(std::span<const std::string_view> strings) const noexcept;

private:
  std::size_t offset(const Index& idx) const noexcept {
    std::size_t o = 0;
    for (std::size_t j = 0; j < arity_; ++j) o += idx[j] * stride_[j];
    return o;
  }

  std::size_t arity_ = 0;
  std::array<std::string_view, kMaxArity> strings_{};
  Index extent_{};  // |S_j| + 1
  Index stride_{};
  std::vector<Cell> cells_;
};

}  // namespace repseq
