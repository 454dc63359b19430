#include "bdcurves/strip.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace bdcurves {

namespace {

const std::array<std::string, 1> kT{"t"};

JetVec3 project_out(const JetVec3& w, const JetVec3& v) {
  return w - v * (inner(w, v) / inner(v, v));
}

}  // namespace

SurfaceCurveSource::SurfaceCurveSource(std::shared_ptr<const SurfacePatch> surface, Expr u,
                                       Expr v, Interval domain, bool flip)
    : surface_(std::move(surface)),
      u_(std::move(u)),
      v_(std::move(v)),
      domain_(domain),
      sign_(flip ? -1.0 : 1.0) {}

SurfaceCurveSource SurfaceCurveSource::parse(std::shared_ptr<const SurfacePatch> surface,
                                             const std::string& u, const std::string& v,
                                             Interval domain, bool flip,
                                             const ConstantTable& constants) {
  return SurfaceCurveSource(std::move(surface), Expr::parse(u, kT, constants),
                            Expr::parse(v, kT, constants), domain, flip);
}

std::array<double, 2> SurfaceCurveSource::uv(double t) const {
  const std::array<double, 1> a{t};
  return {u_.evaluate(a), v_.evaluate(a)};
}

JetVec3 SurfaceCurveSource::position_jet(double t, int order) const {
  const std::array<Jet, 1> a{Jet::variable(t, order)};
  return surface_->position_jet(u_.evaluate(a), v_.evaluate(a));
}

JetVec3 SurfaceCurveSource::normal_jet(double t, int order) const {
  const std::array<Jet, 1> a{Jet::variable(t, order)};
  const Jet u = u_.evaluate(a);
  const Jet v = v_.evaluate(a);
  return unit(cross(surface_->partial_u_jet(u, v), surface_->partial_v_jet(u, v))) * sign_;
}

FieldStripSource::FieldStripSource(CurveExpr curve, NormalMode mode, std::array<Expr, 3> field,
                                   bool flip)
    : curve_(std::move(curve)), mode_(mode), field_(std::move(field)), sign_(flip ? -1.0 : 1.0) {}

JetVec3 FieldStripSource::position_jet(double t, int order) const {
  return curve_.position_jet(t, order);
}

JetVec3 FieldStripSource::normal_jet(double t, int order) const {
  switch (mode_) {
    case NormalMode::PrincipalNormal: {
      const JetVec3 v = differentiate(curve_.position_jet(t, order + 2));
      const JetVec3 a = differentiate(v);
      return unit(project_out(a, v)) * sign_;
    }
    case NormalMode::Binormal: {
      const JetVec3 v = differentiate(curve_.position_jet(t, order + 2));
      return unit(cross(v, differentiate(v))) * sign_;
    }
    case NormalMode::Field:
      break;
  }
  const JetVec3 v = differentiate(curve_.position_jet(t, order + 1));
  const std::array<Jet, 1> a{Jet::variable(t, order)};
  const JetVec3 w{field_[0].evaluate(a), field_[1].evaluate(a), field_[2].evaluate(a)};
  return unit(project_out(w, v)) * sign_;
}

PartnerSource::PartnerSource(std::shared_ptr<const StripSource> base, double lambda)
    : base_(std::move(base)), lambda_(lambda) {
  if (lambda_ == 0.0) throw GeometryError(ErrorCode::ZeroLambda, "offset lambda must be nonzero");
}

JetVec3 PartnerSource::base_g_jet(double t, int order) const {
  const JetVec3 t1 = unit(differentiate(base_->position_jet(t, order + 1)));
  return cross(base_->normal_jet(t, order), t1);
}

JetVec3 PartnerSource::position_jet(double t, int order) const {
  return base_->position_jet(t, order) + base_g_jet(t, order) * lambda_;
}

JetVec3 PartnerSource::normal_jet(double t, int order) const {
  const JetVec3 tp = unit(differentiate(position_jet(t, order + 1)));
  const JetVec3 g1 = base_g_jet(t, order);
  const JetVec3 m = unit(cross(g1, tp));
  const MVec3 g1v = value(g1);
  const double along = inner(cross(value(m), value(tp)), g1v) / inner(g1v, g1v);
  return along < 0.0 ? -m : m;
}

const char* to_string(DarbouxCase c) {
  switch (c) {
    case DarbouxCase::TimelikeSurfaceSpacelikeCurve: return "timelike surface, spacelike curve";
    case DarbouxCase::TimelikeSurfaceTimelikeCurve: return "timelike surface, timelike curve";
    case DarbouxCase::SpacelikeSurface: return "spacelike surface";
  }
  return "?";
}

TripleProductSigns triple_product_signs(DarbouxCase c) {
  switch (c) {
    case DarbouxCase::TimelikeSurfaceSpacelikeCurve: return {-1, 1};
    case DarbouxCase::TimelikeSurfaceTimelikeCurve: return {1, -1};
    case DarbouxCase::SpacelikeSurface: return {1, -1};
  }
  return {};
}

DarbouxData darboux_at(const StripSource& src, double t) {
  const Jet tj = arc_length_jet(src, t, 2);
  const JetVec3 x = to_arc_length(src.position_jet(t, 2), tj);
  const JetVec3 nj = to_arc_length(src.normal_jet(t, 1), tj);
  const JetVec3 tangent = differentiate(x);

  DarbouxData d;
  d.position = value(x);
  d.T = value(tangent);
  d.n = value(nj);
  d.g = cross(d.n, d.T);
  d.speed = 1.0 / tj.derivative(1);
  const MVec3 dT = derivative(tangent, 1);
  const MVec3 dn = derivative(nj, 1);

  d.epsilon = inner(d.T, d.T) < 0.0 ? -1 : 1;
  if (inner(d.n, d.n) < 0.0) {
    d.darboux_case = DarbouxCase::SpacelikeSurface;
    d.kg = inner(dT, d.g);
    d.kn = -inner(dT, d.n);
    d.tg = inner(dn, d.g);
  } else {
    const double eps = d.epsilon;
    d.darboux_case = d.epsilon > 0 ? DarbouxCase::TimelikeSurfaceSpacelikeCurve
                                   : DarbouxCase::TimelikeSurfaceTimelikeCurve;
    d.kg = -eps * inner(dT, d.g);
    d.kn = -eps * inner(dT, d.n);
    d.tg = -eps * inner(dn, d.g);
  }
  d.kg_triple = inner(d.T, cross(dT, d.n));
  d.tg_triple = inner(d.T, cross(d.n, dn));
  return d;
}

StripCurve::StripCurve(std::shared_ptr<const StripSource> source, StripOptions options)
    : source_(std::move(source)), curve_(source_, options.reparam) {
  bool first = true;
  for (double t : uniform_grid(source_->domain(), std::max(options.samples, 2))) {
    const MVec3 n = source_->normal(t);
    const MVec3 v = source_->velocity(t);
    const double nn = inner(n, n);
    const double nt = inner(n, v) / norm(v);
    if (std::fabs(std::fabs(nn) - 1.0) > options.tol_strip || std::fabs(nt) > options.tol_strip ||
        !std::isfinite(nn)) {
      throw GeometryError(ErrorCode::StripInvariantViolation,
                          "normal field is not unit or not orthogonal to the tangent", t);
    }
    const Causal c = nn > 0.0 ? Causal::Spacelike : Causal::Timelike;
    if (first) {
      normal_character_ = c;
      first = false;
    } else if (c != normal_character_) {
      throw GeometryError(ErrorCode::MixedCharacter, "normal changes causal character", t);
    }
  }
}

DarbouxCase StripCurve::darboux_case() const {
  if (normal_character_ == Causal::Timelike) return DarbouxCase::SpacelikeSurface;
  return curve_character() == Causal::Timelike ? DarbouxCase::TimelikeSurfaceTimelikeCurve
                                               : DarbouxCase::TimelikeSurfaceSpacelikeCurve;
}

DarbouxData darboux_frame(const StripCurve& sc, double s) { return sc.darboux_at_t(sc.t_of(s)); }

const char* to_string(LinkForm f) {
  switch (f) {
    case LinkForm::Circular: return "circular";
    case LinkForm::Hyperbolic: return "hyperbolic";
    case LinkForm::HyperbolicSwapped: return "hyperbolic-swapped";
  }
  return "?";
}

namespace {

// Coefficients of N and B in g and in n for each form, as functions of phi.
struct FormCoefficients {
  double gN, gB, nN, nB;
};

FormCoefficients coefficients(LinkForm f, double phi) {
  switch (f) {
    case LinkForm::Circular:
      return {std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi)};
    case LinkForm::Hyperbolic:
      return {std::cosh(phi), std::sinh(phi), std::sinh(phi), std::cosh(phi)};
    case LinkForm::HyperbolicSwapped:
      return {std::sinh(phi), std::cosh(phi), std::cosh(phi), std::sinh(phi)};
  }
  return {};
}

// The second function of each relation pair, k_n = kappa * h(phi).
double second_function(LinkForm f, double phi) {
  switch (f) {
    case LinkForm::Circular: return std::sin(phi);
    case LinkForm::Hyperbolic: return std::sinh(phi);
    case LinkForm::HyperbolicSwapped: return std::cosh(phi);
  }
  return 0.0;
}

double best_signed(double lhs, double rhs, int& sign) {
  const double plus = std::fabs(lhs - rhs);
  const double minus = std::fabs(lhs + rhs);
  sign = plus <= minus ? 1 : -1;
  return std::min(plus, minus);
}

double row_residual(const MVec3& actual, const MVec3& predicted) {
  return std::min(max_abs_component(actual - predicted), max_abs_component(actual + predicted));
}

}  // namespace

FrenetDarbouxLink frenet_darboux_link(const StripCurve& sc, double s, double tol_degenerate) {
  const StripSource& src = sc.source();
  const double t = sc.t_of(s);
  const FrenetData fr = frenet_at(src, t, tol_degenerate);
  const DarbouxData dd = darboux_at(src, t);

  const Jet tj = arc_length_jet(src, t, 3);
  const JetVec3 x = to_arc_length(src.position_jet(t, 3), tj);
  const JetVec3 nj = to_arc_length(src.normal_jet(t, 1), tj);
  const JetVec3 tangent = differentiate(x);
  const JetVec3 dT = differentiate(tangent);
  const Jet q = inner(dT, dT);
  const JetVec3 N = dT / (q.value() < 0.0 ? sqrt(-q) : sqrt(q));
  const JetVec3 T1{tangent.x1.truncated(1), tangent.x2.truncated(1), tangent.x3.truncated(1)};
  const JetVec3 B = cross(T1, N);
  const JetVec3 g = cross(nj, T1);

  const Jet a = inner(g, N) / inner(N, N);
  const Jet b = inner(g, B) / inner(B, B);

  FrenetDarbouxLink link;
  Jet phi;
  if (fr.timelike_curve) {
    link.detected = LinkForm::Circular;
    phi = atan2(b, a);
  } else if ((inner(dd.g, dd.g) > 0.0) == (inner(fr.N, fr.N) > 0.0)) {
    link.detected = LinkForm::Hyperbolic;
    phi = atanh(b / a);
  } else {
    link.detected = LinkForm::HyperbolicSwapped;
    phi = atanh(a / b);
  }
  link.phi = phi.value();
  link.dphi = phi.derivative(1);

  const bool same_character = (sc.surface_kind() == SurfaceKind::TimelikeSurface) ==
                              (sc.curve_character() == Causal::Timelike);
  link.prescribed = same_character ? LinkForm::Circular : LinkForm::Hyperbolic;

  const double kappa = fr.k1;
  const double tau = fr.k2;
  const double f_lit = link.prescribed == LinkForm::Circular ? std::cos(link.phi)
                                                              : std::cosh(link.phi);
  const double h_lit = second_function(link.prescribed, link.phi);
  link.literal_residual = {std::fabs(dd.kg - kappa * f_lit), std::fabs(dd.kn - kappa * h_lit),
                           std::fabs(dd.tg - tau - link.dphi)};

  const FormCoefficients c = coefficients(link.detected, link.phi);
  link.residual[0] = best_signed(dd.kg, kappa * c.gN, link.signs[0]);
  link.residual[1] = best_signed(dd.kn, kappa * second_function(link.detected, link.phi),
                                 link.signs[1]);
  double best = std::numeric_limits<double>::infinity();
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const double r = std::fabs(dd.tg - s1 * tau - s2 * link.dphi);
      if (r < best) {
        best = r;
        link.signs[2] = s1;
        link.signs[3] = s2;
      }
    }
  }
  link.residual[2] = best;
  link.matrix_residual = std::max(row_residual(dd.g, c.gN * fr.N + c.gB * fr.B),
                                  row_residual(dd.n, c.nN * fr.N + c.nB * fr.B));
  return link;
}

std::string to_string(const LineClass& c) {
  std::string out;
  auto add = [&out](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(c.geodesic, "geodesic");
  add(c.asymptotic, "asymptotic line");
  add(c.principal, "principal line");
  return out.empty() ? "none" : out;
}

LineClass classify_line(const StripCurve& sc, double tol_line, int samples) {
  LineClass c;
  for (double t : uniform_grid(sc.source().domain(), std::max(samples, 128))) {
    const DarbouxData d = sc.darboux_at_t(t);
    c.max_kg = std::max(c.max_kg, std::fabs(d.kg));
    c.max_kn = std::max(c.max_kn, std::fabs(d.kn));
    c.max_tg = std::max(c.max_tg, std::fabs(d.tg));
  }
  c.geodesic = c.max_kg <= tol_line;
  c.asymptotic = c.max_kn <= tol_line;
  c.principal = c.max_tg <= tol_line;
  return c;
}

}  // namespace bdcurves
