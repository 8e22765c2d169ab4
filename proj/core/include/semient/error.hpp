#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semient {

enum class ErrorCode {
  ZeroVector,
  BadScalarLiteral,
  CommonFactor,
  DegenerateMap,
  DegreeMismatch,
  RootFindingFailure,
  NotMobius,
  LengthMismatch,
  DuplicateGenerator,
  BudgetExceeded,
  NonGenericTerminal,
  EmptyPath,
  DepthMismatch,
  MixedNu,
  EmptyPool,
  InsufficientData,
  InconsistentItinerary,
  EmptyInput,
  SchemaViolation,
  UnreadableFile,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every module reports failures through this one exception type. `pointer`
// is a JSON pointer into the run configuration when the failure can be
// attributed to a config field, empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string pointer = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& pointer() const noexcept { return pointer_; }
  // The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::string pointer_;
};

}  // namespace semient
