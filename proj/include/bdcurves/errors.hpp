#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bdcurves {

enum class ErrorCode {
  NullVector,
  NullInput,
  OppositeTimeOrientation,
  DegenerateSpan,
  CausalCharacterChange,
  NullTangent,
  DegenerateCurvature,
  NullPrincipalNormal,
  EpsilonChange,
  DegenerateTangentPlane,
  MixedCharacter,
  StripInvariantViolation,
  ZeroLambda,
  SingularOffset,
  NullPartnerTangent,
  UnsupportedCombination,
  PreconditionNotMet,
  OutOfDomain,
};

std::string_view to_string(ErrorCode code);

/// Raised when a geometric precondition fails. `where` carries the parameter
/// value (t, s or s1) at which the failure was detected, when there is one.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& message,
                std::optional<double> where = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::optional<double> where_;
};

/// Malformed expression or configuration text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bdcurves
