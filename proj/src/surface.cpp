#include "bdcurves/surface.hpp"

#include <stdexcept>

namespace bdcurves {

namespace {

const std::array<std::string, 2> kUV{"u", "v"};

template <class S>
BasicVec3<S> eval3(const std::array<Expr, 3>& e, std::span<const S> args) {
  return {e[0].evaluate(args), e[1].evaluate(args), e[2].evaluate(args)};
}

}  // namespace

const char* to_string(SurfaceKind k) {
  return k == SurfaceKind::TimelikeSurface ? "timelike" : "spacelike";
}

SurfacePatch::SurfacePatch(std::array<Expr, 3> coords, Interval u_range, Interval v_range)
    : x_(std::move(coords)), u_range_(u_range), v_range_(v_range) {
  for (int i = 0; i < 3; ++i) {
    xu_[i] = x_[i].derivative(0);
    xv_[i] = x_[i].derivative(1);
  }
}

SurfacePatch SurfacePatch::parse(const std::array<std::string, 3>& coords, Interval u_range,
                                 Interval v_range, const ConstantTable& constants) {
  return SurfacePatch({Expr::parse(coords[0], kUV, constants),
                       Expr::parse(coords[1], kUV, constants),
                       Expr::parse(coords[2], kUV, constants)},
                      u_range, v_range);
}

SurfacePatch SurfacePatch::family(const std::string& name,
                                  const std::map<std::string, double>& params, Interval u_range,
                                  Interval v_range) {
  auto get = [&params](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  const std::string r = format_double(get("r", 1.0));
  std::array<std::string, 3> c;
  if (name == "plane") {
    c = {format_double(get("c", 0.0)), "u", "v"};
  } else if (name == "lorentz_cylinder") {
    c = {"u", r + "*cos(v)", r + "*sin(v)"};
  } else if (name == "hyperbolic_cylinder") {
    c = {r + "*cosh(u)", r + "*sinh(u)", "v"};
  } else if (name == "hyperbolic_plane") {
    c = {r + "*cosh(u)", r + "*sinh(u)*cos(v)", r + "*sinh(u)*sin(v)"};
  } else if (name == "de_sitter") {
    c = {r + "*sinh(u)", r + "*cosh(u)*cos(v)", r + "*cosh(u)*sin(v)"};
  } else {
    throw std::invalid_argument("unknown surface family '" + name + "'");
  }
  return parse(c, u_range, v_range, {});
}

MVec3 SurfacePatch::position(double u, double v) const {
  const std::array<double, 2> a{u, v};
  return eval3<double>(x_, a);
}

MVec3 SurfacePatch::partial_u(double u, double v) const {
  const std::array<double, 2> a{u, v};
  return eval3<double>(xu_, a);
}

MVec3 SurfacePatch::partial_v(double u, double v) const {
  const std::array<double, 2> a{u, v};
  return eval3<double>(xv_, a);
}

JetVec3 SurfacePatch::position_jet(const Jet& u, const Jet& v) const {
  const std::array<Jet, 2> a{u, v};
  return eval3<Jet>(x_, a);
}

JetVec3 SurfacePatch::partial_u_jet(const Jet& u, const Jet& v) const {
  const std::array<Jet, 2> a{u, v};
  return eval3<Jet>(xu_, a);
}

JetVec3 SurfacePatch::partial_v_jet(const Jet& u, const Jet& v) const {
  const std::array<Jet, 2> a{u, v};
  return eval3<Jet>(xv_, a);
}

MVec3 surface_normal(const SurfacePatch& s, double u, double v, double tol_null) {
  const MVec3 c = cross(s.partial_u(u, v), s.partial_v(u, v));
  const CausalCharacter ch = causal_character(c, tol_null);
  if (ch.null() || ch.degenerate) {
    throw GeometryError(ErrorCode::DegenerateTangentPlane,
                        "X_u x X_v is null or zero at (u, v) = (" + format_double(u) + ", " +
                            format_double(v) + ")");
  }
  return normalize(c, tol_null);
}

SurfaceKind surface_causal_type(const SurfacePatch& s, int grid, double tol_null) {
  bool seen_space = false;
  bool seen_time = false;
  for (double u : uniform_grid(s.u_range(), grid)) {
    for (double v : uniform_grid(s.v_range(), grid)) {
      const MVec3 n = surface_normal(s, u, v, tol_null);
      (inner(n, n) > 0.0 ? seen_space : seen_time) = true;
      if (seen_space && seen_time) {
        throw GeometryError(ErrorCode::MixedCharacter,
                            "surface normal changes causal character near (u, v) = (" +
                                format_double(u) + ", " + format_double(v) + ")");
      }
    }
  }
  return seen_space ? SurfaceKind::TimelikeSurface : SurfaceKind::SpacelikeSurface;
}

}  // namespace bdcurves
