#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pedoe {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  Singular,
  Inconsistent,
  ZeroVector,
  ImproperCircle,
  ImaginaryCircle,
  Disjoint,
  DependentKnowns,
  NoRealSolution,
  NotTangent,
  UnknownFamily,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an outcome without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when the quadratic stage of a solve has a negative discriminant.
class NoRealSolutionError : public Error {
 public:
  NoRealSolutionError(const std::string& message, double discriminant);

  double discriminant() const noexcept { return discriminant_; }

 private:
  double discriminant_;
};

}  // namespace pedoe
