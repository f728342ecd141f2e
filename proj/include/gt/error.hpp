#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gt {

enum class ErrorCode {
  NonHyperbolic,
  UnknownGenerator,
  ConstantClass,
  SurfaceMismatch,
  NotDefined,
  NotMappingClass,
  InvalidPuncture,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Broken internal invariant (never a user error).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gt
