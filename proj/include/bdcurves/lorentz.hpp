#pragma once

// Lorentzian linear algebra in E_1^3 with signature (-,+,+).

#include <cmath>
#include <ostream>

#include "bdcurves/errors.hpp"

namespace bdcurves {

/// A vector in E_1^3. The scalar type is `double` for plain geometry and
/// `Jet` when the components carry Taylor coefficients.
template <class S>
struct BasicVec3 {
  S x1{};
  S x2{};
  S x3{};
};

using MVec3 = BasicVec3<double>;

inline constexpr MVec3 kE1{1.0, 0.0, 0.0};
inline constexpr MVec3 kE2{0.0, 1.0, 0.0};
inline constexpr MVec3 kE3{0.0, 0.0, 1.0};

template <class S>
BasicVec3<S> operator+(const BasicVec3<S>& a, const BasicVec3<S>& b) {
  return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

template <class S>
BasicVec3<S> operator-(const BasicVec3<S>& a, const BasicVec3<S>& b) {
  return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

template <class S>
BasicVec3<S> operator-(const BasicVec3<S>& a) {
  return {-a.x1, -a.x2, -a.x3};
}

template <class S, class K>
BasicVec3<S> operator*(const K& k, const BasicVec3<S>& a) {
  return {k * a.x1, k * a.x2, k * a.x3};
}

template <class S, class K>
BasicVec3<S> operator*(const BasicVec3<S>& a, const K& k) {
  return {a.x1 * k, a.x2 * k, a.x3 * k};
}

template <class S, class K>
BasicVec3<S> operator/(const BasicVec3<S>& a, const K& k) {
  return {a.x1 / k, a.x2 / k, a.x3 / k};
}

inline bool operator==(const MVec3& a, const MVec3& b) {
  return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
}

/// <x, y> = -x1 y1 + x2 y2 + x3 y3.
template <class S>
S inner(const BasicVec3<S>& x, const BasicVec3<S>& y) {
  return -(x.x1 * y.x1) + x.x2 * y.x2 + x.x3 * y.x3;
}

/// Lorentz vector product, component formula
/// (x2 y3 - x3 y2, x1 y3 - x3 y1, x2 y1 - x1 y2).
/// Satisfies <x × y, z> = -det(x, y, z).
template <class S>
BasicVec3<S> cross(const BasicVec3<S>& x, const BasicVec3<S>& y) {
  return {x.x2 * y.x3 - x.x3 * y.x2, x.x1 * y.x3 - x.x3 * y.x1,
          x.x2 * y.x1 - x.x1 * y.x2};
}

inline double euclidean_norm(const MVec3& v) {
  return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3);
}

inline double max_abs_component(const MVec3& v) {
  return std::fmax(std::fabs(v.x1), std::fmax(std::fabs(v.x2), std::fabs(v.x3)));
}

std::ostream& operator<<(std::ostream& os, const MVec3& v);

inline constexpr double kDefaultTolNull = 1e-12;

enum class Causal { Spacelike, Timelike, Null };
enum class TimeOrientation { None, FuturePointing, PastPointing };

struct CausalCharacter {
  Causal kind = Causal::Spacelike;
  TimeOrientation orientation = TimeOrientation::None;
  /// Set for the zero vector, which counts as spacelike.
  bool degenerate = false;

  bool spacelike() const { return kind == Causal::Spacelike; }
  bool timelike() const { return kind == Causal::Timelike; }
  bool null() const { return kind == Causal::Null; }
};

const char* to_string(Causal c);

/// Classifies v relative to tol_null * |v|_E^2.
CausalCharacter causal_character(const MVec3& v, double tol_null = kDefaultTolNull);

/// |v| = sqrt(|<v, v>|).
double norm(const MVec3& v);

/// Throws GeometryError(NullVector) when v is null at tolerance tol_null.
MVec3 normalize(const MVec3& v, double tol_null = kDefaultTolNull);

enum class AngleKind { Hyperbolic, Central, Spacelike, LorentzianTimelike };

const char* to_string(AngleKind k);

struct LorentzAngle {
  double theta = 0.0;  ///< always >= 0
  AngleKind kind = AngleKind::Spacelike;
  /// Sign of <x, y>. Only informative for Central and LorentzianTimelike,
  /// where the defining relation is stated for |<x, y>|.
  int sign = 1;
};

/// Unsigned angle between two non-null vectors, kind chosen from the causal
/// characters of the inputs and, for two spacelike inputs, of their span.
LorentzAngle lorentz_angle(const MVec3& x, const MVec3& y,
                           double tol_null = kDefaultTolNull);

/// Rebuilds <x, y> from an angle and the two magnitudes.
double reconstruct_inner(const LorentzAngle& angle, double norm_x, double norm_y);

}  // namespace bdcurves
