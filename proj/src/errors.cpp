#include "tirs/errors.hpp"

namespace tirs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoLowerCovers: return "NoLowerCovers";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotMeetDistributive: return "NotMeetDistributive";
    case ErrorCode::InvalidClosureSystem: return "InvalidClosureSystem";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::pair<std::size_t, std::size_t>> pair)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), pair_(pair) {}

}  // namespace tirs
