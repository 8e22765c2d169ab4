#include "semient/error.hpp"

namespace semient {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BadScalarLiteral: return "BadScalarLiteral";
    case ErrorCode::CommonFactor: return "CommonFactor";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::NotMobius: return "NotMobius";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonGenericTerminal: return "NonGenericTerminal";
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::MixedNu: return "MixedNu";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InconsistentItinerary: return "InconsistentItinerary";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnreadableFile: return "UnreadableFile";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string pointer)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message),
      pointer_(std::move(pointer)) {}

}  // namespace semient
