#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "repseq/factorization.hpp"
#include "repseq/lcs_table.hpp"

namespace repseq {

// Which LCS cell gates the anchor option of the two-factor recurrence.
// Corrected reads L[y-1][z] (U' non-empty); PaperLiteral reads L[y-1][z-1]
// instead, which is strictly stronger and loses witnesses such as "bab".
enum class D2Gate { Corrected, PaperLiteral };

// K-dimensional table of extents (|F_1|+1, ..., |F_K|+1), row-major.
template <std::size_t K>
class DpTable {
public:
  using Index = std::array<std::size_t, K>;

  DpTable() = default;

  void reset(const Index& extents) {
    extents_ = extents;
    std::size_t total = 1;
    for (std::size_t j = K; j-- > 0;) {
      stride_[j] = total;
      total *= extents_[j];
    }
    cells_.assign(total, 0);
  }

  const Index& extents() const noexcept { return extents_; }
  std::size_t stride(std::size_t j) const noexcept { return stride_[j]; }

  template <class... I>
  Cell operator()(I... i) const noexcept {
    static_assert(sizeof...(I) == K);
    return cells_[offset({static_cast<std::size_t>(i)...})];
  }
  template <class... I>
  Cell& operator()(I... i) noexcept {
    static_assert(sizeof...(I) == K);
    return cells_[offset({static_cast<std::size_t>(i)...})];
  }

  Cell corner() const noexcept {
    Index idx;
    for (std::size_t j = 0; j < K; ++j) idx[j] = extents_[j] - 1;
    return cells_[offset(idx)];
  }

  std::size_t offset(const Index& idx) const noexcept {
    std::size_t o = 0;
    for (std::size_t j = 0; j < K; ++j) o += idx[j] * stride_[j];
    return o;
  }

  Cell* data() noexcept { return cells_.data(); }
  const Cell* data() const noexcept { return cells_.data(); }

private:
  Index extents_{};
  Index stride_{};
  std::vector<Cell> cells_;
};

// D2[y][z]: longest U U' with U a subsequence of Y[1..y] and U' a
// non-empty proper prefix of U that is a subsequence of Z[1..z].
using DpTable2 = DpTable<2>;
// D3[x][y][z]: longest U U U' with U common to X[1..x], Y[1..y] and U' a
// prefix of U in Z[1..z], |U'| < |U|.
using DpTable3 = DpTable<3>;
// D4[w][x][y][z]: longest U U U U' with U common to W, X, Y prefixes and
// U' a proper prefix of U in Z[1..z].
using DpTable4 = DpTable<4>;

// The fill functions throw std::logic_error when L was not built over the
// given factors.
void fill_d2(DpTable2& out, std::string_view y, std::string_view z, const LcsTable& lcs,
             D2Gate gate = D2Gate::Corrected);
void fill_d3(DpTable3& out, std::string_view x, std::string_view y, std::string_view z, const LcsTable& lcs);
void fill_d4(DpTable4& out, std::string_view w, std::string_view x, std::string_view y, std::string_view z,
             const LcsTable& lcs);

DpTable2 d2_table(std::string_view y, std::string_view z, const LcsTable& lcs, D2Gate gate = D2Gate::Corrected);
DpTable3 d3_table(std::string_view x, std::string_view y, std::string_view z, const LcsTable& lcs);
DpTable4 d4_table(std::string_view w, std::string_view x, std::string_view y, std::string_view z,
                  const LcsTable& lcs);

// Positions (1-based, global to the text f was cut from) of a subsequence
// realizing the table's corner value. At each cell the first listed
// recurrence option that attains the value is followed. Empty when the
// corner is 0.
std::vector<std::size_t> traceback(const DpTable2& table, const LcsTable& lcs, const Factorization& f,
                                   D2Gate gate = D2Gate::Corrected);
std::vector<std::size_t> traceback(const DpTable3& table, const LcsTable& lcs, const Factorization& f);
std::vector<std::size_t> traceback(const DpTable4& table, const LcsTable& lcs, const Factorization& f);

// The common subsequence at the LCS corner, emitted once inside every factor.
std::vector<std::size_t> lcs_copies(const LcsTable& lcs, const Factorization& f);

}  // namespace repseq
