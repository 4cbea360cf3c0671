#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foxcoh {

enum class ErrorCode {
  DivisionByZero,
  SyntaxError,
  UnknownGenerator,
  NonConstantExpression,
  NotInGroup,
  NotARepresentation,
  NoInvariantForm,
  AmbiguousForm,
  DegenerateForm,
  NonHermitian,
  SubspaceNotPreserved,
  InvalidInput,
  CheckFailed,
};

/// Stable machine-readable name, e.g. "NOT_IN_GROUP".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the 0-based character offset of the offending input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(ErrorCode::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace foxcoh
