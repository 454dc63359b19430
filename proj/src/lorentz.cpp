#include "bdcurves/lorentz.hpp"

#include <algorithm>

namespace bdcurves {

std::ostream& operator<<(std::ostream& os, const MVec3& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

const char* to_string(Causal c) {
  switch (c) {
    case Causal::Spacelike:
      return "spacelike";
    case Causal::Timelike:
      return "timelike";
    case Causal::Null:
      return "null";
  }
  return "?";
}

const char* to_string(AngleKind k) {
  switch (k) {
    case AngleKind::Hyperbolic:
      return "hyperbolic";
    case AngleKind::Central:
      return "central";
    case AngleKind::Spacelike:
      return "spacelike";
    case AngleKind::LorentzianTimelike:
      return "lorentzian-timelike";
  }
  return "?";
}

CausalCharacter causal_character(const MVec3& v, double tol_null) {
  const double e2 = v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
  if (e2 == 0.0) {
    return {Causal::Spacelike, TimeOrientation::None, true};
  }
  const double q = inner(v, v);
  if (q > tol_null * e2) {
    return {Causal::Spacelike, TimeOrientation::None, false};
  }
  if (q < -tol_null * e2) {
    return {Causal::Timelike,
            v.x1 > 0 ? TimeOrientation::FuturePointing : TimeOrientation::PastPointing,
            false};
  }
  return {Causal::Null, TimeOrientation::None, false};
}

double norm(const MVec3& v) { return std::sqrt(std::fabs(inner(v, v))); }

MVec3 normalize(const MVec3& v, double tol_null) {
  const auto c = causal_character(v, tol_null);
  if (c.null() || c.degenerate) {
    throw GeometryError(ErrorCode::NullVector, "cannot normalize a null or zero vector");
  }
  return v / norm(v);
}

LorentzAngle lorentz_angle(const MVec3& x, const MVec3& y, double tol_null) {
  const auto cx = causal_character(x, tol_null);
  const auto cy = causal_character(y, tol_null);
  if (cx.null() || cy.null() || cx.degenerate || cy.degenerate) {
    throw GeometryError(ErrorCode::NullInput, "angle undefined for null or zero input");
  }
  const double p = inner(x, y);
  const double scale = norm(x) * norm(y);
  const double ratio = std::fabs(p) / scale;
  const int sign = p < 0 ? -1 : 1;

  if (cx.timelike() && cy.timelike()) {
    if (cx.orientation != cy.orientation) {
      throw GeometryError(ErrorCode::OppositeTimeOrientation,
                          "hyperbolic angle needs equally time-oriented vectors");
    }
    return {std::acosh(std::max(1.0, -p / scale)), AngleKind::Hyperbolic, sign};
  }
  if (cx.timelike() != cy.timelike()) {
    return {std::asinh(ratio), AngleKind::LorentzianTimelike, sign};
  }
  const auto cn = causal_character(cross(x, y), tol_null);
  if (cn.null() || cn.degenerate) {
    throw GeometryError(ErrorCode::DegenerateSpan, "inputs span a degenerate plane");
  }
  if (cn.timelike()) {
    return {std::acos(std::clamp(p / scale, -1.0, 1.0)), AngleKind::Spacelike, sign};
  }
  return {std::acosh(std::max(1.0, ratio)), AngleKind::Central, sign};
}

double reconstruct_inner(const LorentzAngle& angle, double norm_x, double norm_y) {
  const double s = norm_x * norm_y;
  switch (angle.kind) {
    case AngleKind::Hyperbolic:
      return -s * std::cosh(angle.theta);
    case AngleKind::Central:
      return angle.sign * s * std::cosh(angle.theta);
    case AngleKind::Spacelike:
      return s * std::cos(angle.theta);
    case AngleKind::LorentzianTimelike:
      return angle.sign * s * std::sinh(angle.theta);
  }
  return 0.0;
}

}  // namespace bdcurves
