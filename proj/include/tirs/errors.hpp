#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tirs {

enum class ErrorCode {
  InvalidInput,
  NotAPartialOrder,
  NotALattice,
  NoLowerCovers,
  EmptyInterval,
  NotReflexive,
  NotDisjoint,
  NotMeetDistributive,
  InvalidClosureSystem,
  BoundTooLarge,
  UnknownProperty,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `pair()` names the offending pair of
/// elements (or vertices) when the failure is about one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::pair<std::size_t, std::size_t>> pair = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& pair() const noexcept { return pair_; }

 private:
  ErrorCode code_;
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

}  // namespace tirs
