#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mstd {

enum class ErrorCode {
  EmptySet,
  DegenerateSet,
  UniverseOverflow,
  ParseError,
  InvalidParameter,
  ConstraintViolation,
  BudgetExceeded,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DegenerateSet: return "DegenerateSet";
    case ErrorCode::UniverseOverflow: return "UniverseOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::ParseError,
              what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  /// Byte offset into the input where parsing failed.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mstd
