#include "bdcurves/errors.hpp"

namespace bdcurves {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NullVector: return "NullVector";
    case ErrorCode::NullInput: return "NullInput";
    case ErrorCode::OppositeTimeOrientation: return "OppositeTimeOrientation";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::CausalCharacterChange: return "CausalCharacterChange";
    case ErrorCode::NullTangent: return "NullTangent";
    case ErrorCode::DegenerateCurvature: return "DegenerateCurvature";
    case ErrorCode::NullPrincipalNormal: return "NullPrincipalNormal";
    case ErrorCode::EpsilonChange: return "EpsilonChange";
    case ErrorCode::DegenerateTangentPlane: return "DegenerateTangentPlane";
    case ErrorCode::MixedCharacter: return "MixedCharacter";
    case ErrorCode::StripInvariantViolation: return "StripInvariantViolation";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::SingularOffset: return "SingularOffset";
    case ErrorCode::NullPartnerTangent: return "NullPartnerTangent";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::PreconditionNotMet: return "PreconditionNotMet";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::optional<double> where) {
  std::string out(to_string(code));
  out += ": ";
  out += message;
  if (where) {
    out += " (at parameter ";
    out += std::to_string(*where);
    out += ')';
  }
  return out;
}

}  // namespace

GeometryError::GeometryError(ErrorCode code, const std::string& message,
                             std::optional<double> where)
    : std::runtime_error(decorate(code, message, where)), code_(code), where_(where) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ":" +
                                        std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

}  // namespace bdcurves
