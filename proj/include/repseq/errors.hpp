#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repseq {

// Input exceeds a configured size limit (drivers and the oracle).
class GuardError : public std::runtime_error {
public:
  GuardError(std::string guard, std::size_t n, std::size_t limit)
      : std::runtime_error("input length " + std::to_string(n) + " exceeds the " + guard +
                           " limit of " + std::to_string(limit)),
        guard_(std::move(guard)), n_(n), limit_(limit) {}

  const std::string& guard() const noexcept { return guard_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::string guard_;
  std::size_t n_;
  std::size_t limit_;
};

}  // namespace repseq
