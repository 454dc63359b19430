#pragma once

// Strips (curves carrying a unit normal field) and the Darboux apparatus.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "bdcurves/curve.hpp"
#include "bdcurves/surface.hpp"

namespace bdcurves {

/// A curve in its own parameter t plus a unit normal field orthogonal to the
/// tangent. A curve on a surface reduces to this.
class StripSource : public ParametricCurve {
 public:
  virtual JetVec3 normal_jet(double t, int order) const = 0;

  MVec3 normal(double t) const { return value(normal_jet(t, 0)); }
};

/// The curve X(u(t), v(t)) with n = unit(X_u × X_v), optionally flipped.
class SurfaceCurveSource : public StripSource {
 public:
  SurfaceCurveSource(std::shared_ptr<const SurfacePatch> surface, Expr u, Expr v,
                     Interval domain, bool flip = false);

  static SurfaceCurveSource parse(std::shared_ptr<const SurfacePatch> surface,
                                  const std::string& u, const std::string& v, Interval domain,
                                  bool flip = false,
                                  const ConstantTable& constants = builtin_constants());

  JetVec3 position_jet(double t, int order) const override;
  JetVec3 normal_jet(double t, int order) const override;
  Interval domain() const override { return domain_; }

  const SurfacePatch& surface() const { return *surface_; }
  std::array<double, 2> uv(double t) const;

 private:
  std::shared_ptr<const SurfacePatch> surface_;
  Expr u_;
  Expr v_;
  Interval domain_;
  double sign_;
};

enum class NormalMode {
  Field,            ///< a given vector field, projected orthogonal to T
  PrincipalNormal,  ///< n along the Frenet N, so the strip is geodesic
  Binormal,         ///< n along the Frenet B, so the strip is asymptotic
};

/// A space curve with a normal field that is not tied to an explicit surface.
class FieldStripSource : public StripSource {
 public:
  FieldStripSource(CurveExpr curve, NormalMode mode, std::array<Expr, 3> field = {},
                   bool flip = false);

  JetVec3 position_jet(double t, int order) const override;
  JetVec3 normal_jet(double t, int order) const override;
  Interval domain() const override { return curve_.domain(); }

 private:
  CurveExpr curve_;
  NormalMode mode_;
  std::array<Expr, 3> field_;
  double sign_;
};

/// Reverses the normal of another strip.
class FlippedSource : public StripSource {
 public:
  explicit FlippedSource(std::shared_ptr<const StripSource> inner) : inner_(std::move(inner)) {}

  JetVec3 position_jet(double t, int order) const override {
    return inner_->position_jet(t, order);
  }
  JetVec3 normal_jet(double t, int order) const override { return -inner_->normal_jet(t, order); }
  Interval domain() const override { return inner_->domain(); }

 private:
  std::shared_ptr<const StripSource> inner_;
};

/// The offset x = x1 + lambda g1 of a base strip, in the base parameter t.
/// Its normal is the unit vector of span{T1, n1} orthogonal to the offset
/// tangent, signed so that n × T = +g1.
class PartnerSource : public StripSource {
 public:
  PartnerSource(std::shared_ptr<const StripSource> base, double lambda);

  JetVec3 position_jet(double t, int order) const override;
  JetVec3 normal_jet(double t, int order) const override;
  Interval domain() const override { return base_->domain(); }

  const StripSource& base() const { return *base_; }
  double lambda() const { return lambda_; }
  /// The base's g1 = n1 × T1 as a jet in t.
  JetVec3 base_g_jet(double t, int order) const;

 private:
  std::shared_ptr<const StripSource> base_;
  double lambda_;
};

/// Which Darboux derivative system applies.
enum class DarbouxCase {
  TimelikeSurfaceSpacelikeCurve,  ///< n spacelike, epsilon = +1
  TimelikeSurfaceTimelikeCurve,   ///< n spacelike, epsilon = -1
  SpacelikeSurface,               ///< n timelike
};

const char* to_string(DarbouxCase c);

/// Signs s with projection value = s * (curvature formula value), for k_g and
/// tau_g in each case. Determined by calibration and pinned by tests.
struct TripleProductSigns {
  int kg = 1;
  int tg = 1;
};

TripleProductSigns triple_product_signs(DarbouxCase c);

struct DarbouxData {
  MVec3 position;
  MVec3 T, g, n;
  double kg = 0.0;
  double kn = 0.0;
  double tg = 0.0;
  DarbouxCase darboux_case = DarbouxCase::SpacelikeSurface;
  int epsilon = 1;  ///< <T, T>
  /// Raw values of k_g = <x', x'' × n> and tau_g = <x', n × n'>.
  double kg_triple = 0.0;
  double tg_triple = 0.0;
  /// ds/dt of the strip's own parameter.
  double speed = 0.0;
};

/// Darboux apparatus at parameter t of a strip source, derivatives taken in
/// the strip's arc length.
DarbouxData darboux_at(const StripSource& src, double t);

struct StripOptions {
  ReparamOptions reparam;
  int samples = 256;
  double tol_strip = 1e-9;
};

/// A strip with its arc-length map and causal tags, invariants checked on a
/// sample grid at construction.
class StripCurve {
 public:
  explicit StripCurve(std::shared_ptr<const StripSource> source, StripOptions options = {});

  const StripSource& source() const { return *source_; }
  std::shared_ptr<const StripSource> source_ptr() const { return source_; }
  const UnitSpeedCurve& curve() const { return curve_; }
  double length() const { return curve_.length(); }
  double t_of(double s) const { return curve_.t_of(s); }

  Causal curve_character() const { return curve_.character().kind; }
  Causal normal_character() const { return normal_character_; }
  SurfaceKind surface_kind() const {
    return normal_character_ == Causal::Spacelike ? SurfaceKind::TimelikeSurface
                                                  : SurfaceKind::SpacelikeSurface;
  }
  DarbouxCase darboux_case() const;

  DarbouxData darboux_at_t(double t) const { return darboux_at(*source_, t); }

 private:
  std::shared_ptr<const StripSource> source_;
  UnitSpeedCurve curve_;
  Causal normal_character_ = Causal::Spacelike;
};

DarbouxData darboux_frame(const StripCurve& sc, double s);

enum class LinkForm {
  Circular,           ///< g = cos(phi) N + sin(phi) B
  Hyperbolic,         ///< g = cosh(phi) N + sinh(phi) B
  HyperbolicSwapped,  ///< g = sinh(phi) N + cosh(phi) B
};

const char* to_string(LinkForm f);

struct FrenetDarbouxLink {
  double phi = 0.0;
  double dphi = 0.0;  ///< d(phi)/ds
  LinkForm detected = LinkForm::Circular;
  /// Form the frame-relation text assigns to this case: circular when the
  /// surface and curve share a character, hyperbolic otherwise.
  LinkForm prescribed = LinkForm::Circular;
  /// Residuals of k_g = kappa f(phi), k_n = kappa h(phi), tau_g = tau + phi'
  /// taken literally with the prescribed functions.
  std::array<double, 3> literal_residual{};
  /// The same relations with the detected functions, each with the sign
  /// choice that fits best; `signs` records the choice.
  std::array<double, 3> residual{};
  std::array<int, 4> signs{1, 1, 1, 1};
  /// max componentwise |(g, n) - M(phi) (N, B)| allowing for the sign choice.
  double matrix_residual = 0.0;
};

FrenetDarbouxLink frenet_darboux_link(const StripCurve& sc, double s,
                                      double tol_degenerate = kDefaultTolDegenerate);

struct LineClass {
  bool geodesic = false;
  bool asymptotic = false;
  bool principal = false;
  double max_kg = 0.0;
  double max_kn = 0.0;
  double max_tg = 0.0;
};

std::string to_string(const LineClass& c);

LineClass classify_line(const StripCurve& sc, double tol_line = 1e-8, int samples = 128);

}  // namespace bdcurves
