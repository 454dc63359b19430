#pragma once

// Parametric surface patches in (u, v).

#include <array>
#include <map>
#include <memory>
#include <string>

#include "bdcurves/curve.hpp"
#include "bdcurves/expr.hpp"

namespace bdcurves {

enum class SurfaceKind { TimelikeSurface, SpacelikeSurface };

const char* to_string(SurfaceKind k);

class SurfacePatch {
 public:
  SurfacePatch(std::array<Expr, 3> coords, Interval u_range, Interval v_range);

  static SurfacePatch parse(const std::array<std::string, 3>& coords, Interval u_range,
                            Interval v_range,
                            const ConstantTable& constants = builtin_constants());

  /// Built-in families. Parameters by name; missing ones take defaults.
  ///   plane                (c, u, v)                                   c = 0
  ///   lorentz_cylinder     (u, r cos v, r sin v)                       r = 1
  ///   hyperbolic_cylinder  (r cosh u, r sinh u, v)                     r = 1
  ///   hyperbolic_plane     (r cosh u, r sinh u cos v, r sinh u sin v)  r = 1
  ///   de_sitter            (r sinh u, r cosh u cos v, r cosh u sin v)  r = 1
  static SurfacePatch family(const std::string& name, const std::map<std::string, double>& params,
                             Interval u_range, Interval v_range);

  MVec3 position(double u, double v) const;
  MVec3 partial_u(double u, double v) const;
  MVec3 partial_v(double u, double v) const;

  /// X(u(t), v(t)) and the partials along it, all as jets.
  JetVec3 position_jet(const Jet& u, const Jet& v) const;
  JetVec3 partial_u_jet(const Jet& u, const Jet& v) const;
  JetVec3 partial_v_jet(const Jet& u, const Jet& v) const;

  Interval u_range() const { return u_range_; }
  Interval v_range() const { return v_range_; }
  const std::array<Expr, 3>& coords() const { return x_; }

 private:
  std::array<Expr, 3> x_;
  std::array<Expr, 3> xu_;
  std::array<Expr, 3> xv_;
  Interval u_range_;
  Interval v_range_;
};

/// normalize(X_u × X_v); throws DegenerateTangentPlane when the cross product
/// is null or zero.
MVec3 surface_normal(const SurfacePatch& s, double u, double v,
                     double tol_null = kDefaultTolNull);

/// Timelike surface iff the normal is spacelike on the whole grid, spacelike
/// surface iff it is timelike on the whole grid; MixedCharacter otherwise.
SurfaceKind surface_causal_type(const SurfacePatch& s, int grid = 32,
                                double tol_null = kDefaultTolNull);

}  // namespace bdcurves
