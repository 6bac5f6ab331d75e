#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace j3 {

enum class ErrorCode {
  NonFinite,
  NotInvertible,
  Ambiguous,
  PatternViolation,
  Singular,
  ZeroLHS,
  Unsupported,
  ZeroInput,
  DomainError,
  Overflow,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ZeroLHS: return "ZeroLHS";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Raised by every library operation whose precondition fails.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace j3
