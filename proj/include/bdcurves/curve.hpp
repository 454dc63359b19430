#pragma once

// Parametric curves, arc-length reparametrization and Frenet frames.

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bdcurves/expr.hpp"
#include "bdcurves/jet.hpp"
#include "bdcurves/lorentz.hpp"

namespace bdcurves {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Anything that can produce its position as a Taylor jet in its own
/// parameter t.
class ParametricCurve {
 public:
  virtual ~ParametricCurve() = default;
  virtual JetVec3 position_jet(double t, int order) const = 0;
  virtual Interval domain() const = 0;

  MVec3 position(double t) const { return value(position_jet(t, 0)); }
  /// x'(t).
  MVec3 velocity(double t) const { return derivative(position_jet(t, 1), 1); }
  /// |x'(t)| = sqrt(|<x', x'>|).
  double speed(double t) const { return norm(velocity(t)); }
};

/// A curve given by three coordinate expressions in t.
class CurveExpr : public ParametricCurve {
 public:
  CurveExpr(std::array<Expr, 3> coords, Interval domain);

  /// Parses the three coordinates with `t` as the only parameter.
  static CurveExpr parse(const std::array<std::string, 3>& coords, Interval domain,
                         const ConstantTable& constants = builtin_constants());

  JetVec3 position_jet(double t, int order) const override;
  Interval domain() const override { return domain_; }
  const std::array<Expr, 3>& coords() const { return coords_; }

 private:
  std::array<Expr, 3> coords_;
  Interval domain_;
};

/// Tabulated s(t) = integral of |x'| with Newton inversion.
class ArcLengthMap {
 public:
  ArcLengthMap(std::function<double(double)> speed, Interval domain, double tol,
               int panels = 64);

  double length() const { return cumulative_.back(); }
  double s_of(double t) const;
  double t_of(double s) const;

 private:
  double integrate(double a, double b) const;

  std::function<double(double)> speed_;
  Interval domain_;
  double tol_;
  std::vector<double> knots_;
  std::vector<double> cumulative_;
};

struct ReparamOptions {
  double tol = 1e-10;
  int character_samples = 256;
  double tol_null = kDefaultTolNull;
};

/// A non-null curve together with its arc-length parametrization.
class UnitSpeedCurve {
 public:
  UnitSpeedCurve(std::shared_ptr<const ParametricCurve> curve, ReparamOptions options = {});

  const ParametricCurve& curve() const { return *curve_; }
  std::shared_ptr<const ParametricCurve> curve_ptr() const { return curve_; }
  double length() const { return map_->length(); }
  double s_of(double t) const { return map_->s_of(t); }
  double t_of(double s) const { return map_->t_of(s); }
  CausalCharacter character() const { return character_; }

  /// Position as a jet in arc length about s.
  JetVec3 position_s(double s, int order) const;

  /// The curve in its arc-length parameter, usable as a ParametricCurve.
  std::shared_ptr<const ParametricCurve> as_parametric() const;

 private:
  std::shared_ptr<const ParametricCurve> curve_;
  std::shared_ptr<const ArcLengthMap> map_;
  CausalCharacter character_;
};

UnitSpeedCurve arc_length_reparam(std::shared_ptr<const ParametricCurve> curve,
                                  double tol = 1e-10);

/// The arc-length parameter as a function t(s), expanded about s(t): a jet of
/// the given order whose value is t.
Jet arc_length_jet(const ParametricCurve& curve, double t, int order);

/// Re-expands a jet in t as a jet in arc length.
JetVec3 to_arc_length(const JetVec3& field, const Jet& t_of_s);
Jet to_arc_length(const Jet& field, const Jet& t_of_s);

CausalCharacter curve_causal_type(const UnitSpeedCurve& c);

inline constexpr double kDefaultTolDegenerate = 1e-10;

struct FrenetData {
  MVec3 position;
  MVec3 T, N, B;
  double k1 = 0.0;  ///< curvature
  double k2 = 0.0;  ///< torsion
  /// <N, N> for spacelike curves; 0 for timelike curves.
  int epsilon = 0;
  bool timelike_curve = false;
  /// B = binormal_sign * (T × N).
  int binormal_sign = 1;
};

/// Frenet apparatus at parameter t of the underlying curve.
FrenetData frenet_at(const ParametricCurve& curve, double t,
                     double tol_degenerate = kDefaultTolDegenerate,
                     double tol_null = kDefaultTolNull);

FrenetData frenet_frame(const UnitSpeedCurve& c, double s,
                        double tol_degenerate = kDefaultTolDegenerate);

/// Frenet data on a uniform s grid; raises EpsilonChange when <N, N> flips.
std::vector<FrenetData> frenet_series(const UnitSpeedCurve& c, const std::vector<double>& s,
                                      double tol_degenerate = kDefaultTolDegenerate);

/// Max componentwise residual of the Frenet system (spacelike or timelike
/// matrix according to the curve) at arc length s, frame derivatives taken by
/// a 5-point central difference of step h.
double frenet_ode_residual(const UnitSpeedCurve& c, double s, double h = 1e-3,
                           double tol_degenerate = kDefaultTolDegenerate);

/// n points spaced evenly over [lo, hi], both ends included.
std::vector<double> uniform_grid(Interval range, int n);

}  // namespace bdcurves
