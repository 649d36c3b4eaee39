#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <string_view>

namespace repseq {

// T = F_1 ... F_k cut at positions b_1 < ... < b_{k-1}; factor j covers
// T[b_{j-1}+1 .. b_j] with b_0 = 0 and b_k = n.
struct Factorization {
  std::size_t k = 2;
  std::array<std::size_t, 3> cuts{};
  std::size_t n = 0;

  // 0-based offset of factor j in T.
  std::size_t start(std::size_t j) const noexcept { return j == 0 ? 0 : cuts[j - 1]; }
  std::size_t end(std::size_t j) const noexcept { return j + 1 == k ? n : cuts[j]; }
  std::size_t size(std::size_t j) const noexcept { return end(j) - start(j); }

  std::string_view factor(std::string_view text, std::size_t j) const noexcept {
    assert(text.size() == n);
    return text.substr(start(j), size(j));
  }

  bool operator==(const Factorization&) const = default;
};

}  // namespace repseq
