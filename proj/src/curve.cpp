#include "bdcurves/curve.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

namespace bdcurves {

CurveExpr::CurveExpr(std::array<Expr, 3> coords, Interval domain)
    : coords_(std::move(coords)), domain_(domain) {}

CurveExpr CurveExpr::parse(const std::array<std::string, 3>& coords, Interval domain,
                           const ConstantTable& constants) {
  static const std::array<std::string, 1> kParams{"t"};
  return CurveExpr({Expr::parse(coords[0], kParams, constants),
                    Expr::parse(coords[1], kParams, constants),
                    Expr::parse(coords[2], kParams, constants)},
                   domain);
}

JetVec3 CurveExpr::position_jet(double t, int order) const {
  const std::array<Jet, 1> args{Jet::variable(t, order)};
  return {coords_[0].evaluate(args), coords_[1].evaluate(args), coords_[2].evaluate(args)};
}

ArcLengthMap::ArcLengthMap(std::function<double(double)> speed, Interval domain, double tol,
                           int panels)
    : speed_(std::move(speed)), domain_(domain), tol_(tol) {
  knots_ = uniform_grid(domain, panels + 1);
  cumulative_.assign(knots_.size(), 0.0);
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    cumulative_[k] = cumulative_[k - 1] + integrate(knots_[k - 1], knots_[k]);
  }
}

double ArcLengthMap::integrate(double a, double b) const {
  if (a == b) return 0.0;
  // The adaptive rule compares an unscaled error estimate with a scaled
  // tolerance and recurses to full depth on very short intervals.
  if (std::fabs(b - a) <= 1e-6 * domain_.width()) {
    return boost::math::quadrature::gauss<double, 10>::integrate(speed_, a, b);
  }
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(speed_, a, b, 12, tol_);
}

double ArcLengthMap::s_of(double t) const {
  t = std::clamp(t, domain_.lo, domain_.hi);
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  std::size_t k = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
  if (k + 1 >= knots_.size()) return cumulative_.back();
  return cumulative_[k] + integrate(knots_[k], t);
}

double ArcLengthMap::t_of(double s) const {
  if (s <= 0.0) return domain_.lo;
  if (s >= length()) return domain_.hi;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  double lo = knots_[k];
  double hi = knots_[k + 1];
  const double frac = (s - cumulative_[k]) / (cumulative_[k + 1] - cumulative_[k]);
  double t = lo + frac * (hi - lo);
  for (int iter = 0; iter < 60; ++iter) {
    const double f = cumulative_[k] + integrate(knots_[k], t) - s;
    if (std::fabs(f) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, s)) break;
    if (f > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    double next = t - f / speed_(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - t);
    t = next;
    if (step <= 1e-15 * std::max(1.0, std::fabs(t))) break;
  }
  return t;
}

namespace {

class UnitSpeedView : public ParametricCurve {
 public:
  explicit UnitSpeedView(UnitSpeedCurve c) : c_(std::move(c)) {}
  JetVec3 position_jet(double s, int order) const override { return c_.position_s(s, order); }
  Interval domain() const override { return {0.0, c_.length()}; }

 private:
  UnitSpeedCurve c_;
};

}  // namespace

UnitSpeedCurve::UnitSpeedCurve(std::shared_ptr<const ParametricCurve> curve,
                               ReparamOptions options)
    : curve_(std::move(curve)) {
  const Interval dom = curve_->domain();
  const int samples = std::max(options.character_samples, 2);
  bool first = true;
  for (double t : uniform_grid(dom, samples)) {
    const MVec3 v = curve_->velocity(t);
    const CausalCharacter c = causal_character(v, options.tol_null);
    if (c.null() || c.degenerate) {
      throw GeometryError(ErrorCode::NullTangent, "tangent is null or zero", t);
    }
    if (first) {
      character_ = c;
      first = false;
    } else if (c.kind != character_.kind) {
      throw GeometryError(ErrorCode::CausalCharacterChange,
                          "tangent changes causal character", t);
    }
  }
  character_.orientation = TimeOrientation::None;
  const ParametricCurve* raw = curve_.get();
  map_ = std::make_shared<ArcLengthMap>([raw](double t) { return raw->speed(t); }, dom,
                                        options.tol);
}

JetVec3 UnitSpeedCurve::position_s(double s, int order) const {
  const double t = t_of(s);
  return to_arc_length(curve_->position_jet(t, order), arc_length_jet(*curve_, t, order));
}

std::shared_ptr<const ParametricCurve> UnitSpeedCurve::as_parametric() const {
  return std::make_shared<UnitSpeedView>(*this);
}

UnitSpeedCurve arc_length_reparam(std::shared_ptr<const ParametricCurve> curve, double tol) {
  ReparamOptions options;
  options.tol = tol;
  return UnitSpeedCurve(std::move(curve), options);
}

Jet arc_length_jet(const ParametricCurve& curve, double t, int order) {
  if (order == 0) return Jet(t, 0);
  const JetVec3 v = differentiate(curve.position_jet(t, order));
  const Jet q = inner(v, v);
  const Jet speed = q.value() < 0.0 ? sqrt(-q) : sqrt(q);
  return inverse_from_speed(t, speed);
}

JetVec3 to_arc_length(const JetVec3& field, const Jet& t_of_s) { return compose(field, t_of_s); }

Jet to_arc_length(const Jet& field, const Jet& t_of_s) { return compose(field, t_of_s); }

CausalCharacter curve_causal_type(const UnitSpeedCurve& c) { return c.character(); }

FrenetData frenet_at(const ParametricCurve& curve, double t, double tol_degenerate,
                     double tol_null) {
  const JetVec3 x = to_arc_length(curve.position_jet(t, 3), arc_length_jet(curve, t, 3));
  const JetVec3 T = differentiate(x);
  const JetVec3 dT = differentiate(T);
  const MVec3 t0 = value(T);
  const MVec3 dt0 = value(dT);
  const double q = inner(dt0, dt0);
  const double euclid = euclidean_norm(dt0);
  if (euclid <= tol_degenerate) {
    throw GeometryError(ErrorCode::DegenerateCurvature, "curvature vanishes", t);
  }
  if (std::fabs(q) <= tol_null * euclid * euclid) {
    throw GeometryError(ErrorCode::NullPrincipalNormal, "principal normal is null", t);
  }
  const double kappa = std::sqrt(std::fabs(q));
  if (kappa <= tol_degenerate) {
    throw GeometryError(ErrorCode::DegenerateCurvature, "curvature vanishes", t);
  }

  const Jet q_jet = inner(dT, dT);
  const Jet kappa_jet = q < 0.0 ? sqrt(-q_jet) : sqrt(q_jet);
  const JetVec3 N = dT / kappa_jet;
  const MVec3 n0 = value(N);
  const MVec3 dn0 = derivative(N, 1);

  FrenetData f;
  f.position = value(x);
  f.T = t0;
  f.N = n0;
  f.B = cross(t0, n0);
  f.k1 = kappa;
  f.timelike_curve = inner(t0, t0) < 0.0;
  if (f.timelike_curve) {
    f.epsilon = 0;
    f.k2 = inner(dn0, f.B);
  } else {
    f.epsilon = q > 0.0 ? 1 : -1;
    f.k2 = -f.epsilon * inner(dn0, f.B);
  }
  return f;
}

FrenetData frenet_frame(const UnitSpeedCurve& c, double s, double tol_degenerate) {
  return frenet_at(c.curve(), c.t_of(s), tol_degenerate);
}

std::vector<FrenetData> frenet_series(const UnitSpeedCurve& c, const std::vector<double>& s,
                                      double tol_degenerate) {
  std::vector<FrenetData> out;
  out.reserve(s.size());
  for (double si : s) {
    out.push_back(frenet_frame(c, si, tol_degenerate));
    if (out.size() > 1 && out.back().epsilon != out.front().epsilon) {
      throw GeometryError(ErrorCode::EpsilonChange, "<N, N> changes sign", si);
    }
  }
  return out;
}

double frenet_ode_residual(const UnitSpeedCurve& c, double s, double h,
                           double tol_degenerate) {
  const FrenetData f = frenet_frame(c, s, tol_degenerate);
  std::array<FrenetData, 4> st{frenet_frame(c, s - 2 * h, tol_degenerate),
                               frenet_frame(c, s - h, tol_degenerate),
                               frenet_frame(c, s + h, tol_degenerate),
                               frenet_frame(c, s + 2 * h, tol_degenerate)};
  auto fd = [&](auto get) {
    return (get(st[0]) - 8.0 * get(st[1]) + 8.0 * get(st[2]) - get(st[3])) / (12.0 * h);
  };
  const MVec3 dT = fd([](const FrenetData& d) { return d.T; });
  const MVec3 dN = fd([](const FrenetData& d) { return d.N; });
  const MVec3 dB = fd([](const FrenetData& d) { return d.B; });

  MVec3 rT = dT - f.k1 * f.N;
  MVec3 rN, rB;
  if (f.timelike_curve) {
    rN = dN - (f.k1 * f.T + f.k2 * f.B);
    rB = dB + f.k2 * f.N;
  } else {
    rN = dN - (-f.epsilon * f.k1 * f.T + f.k2 * f.B);
    rB = dB - f.k2 * f.N;
  }
  double worst = 0.0;
  for (const MVec3& r : {rT, rN, rB}) {
    worst = std::max({worst, std::fabs(r.x1), std::fabs(r.x2), std::fabs(r.x3)});
  }
  return worst;
}

std::vector<double> uniform_grid(Interval range, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = range.lo;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    out[i] = i == n - 1 ? range.hi : range.lo + range.width() * i / (n - 1);
  }
  return out;
}

}  // namespace bdcurves
