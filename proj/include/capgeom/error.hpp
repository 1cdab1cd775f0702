#pragma once

#include <stdexcept>
#include <string>

namespace capgeom {

enum class ErrorCode {
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  NotASubfield,
  SpaceTooLarge,
  ZeroVector,
  DuplicatePoints,
  DimensionMismatch,
  FieldNotSquareOrder,
  PointInSet,
  NotACap,
  SpaceTooLargeForSearch,
  NotADivisor,
  TargetInfeasible,
  SearchTooLarge,
  DivisibilityViolation,
  BadParameter,
  BadDimension,
  NotASquare,
  GroupTooLarge,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this type; `code()` identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace capgeom
