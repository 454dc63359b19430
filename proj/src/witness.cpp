#include "bdcurves/witness.hpp"

namespace bdcurves {

namespace {

std::shared_ptr<const SurfacePatch> family(const std::string& name, Interval u, Interval v) {
  return std::make_shared<SurfacePatch>(SurfacePatch::family(name, {}, u, v));
}

std::shared_ptr<const SurfacePatch> patch(const std::array<std::string, 3>& c, Interval u,
                                          Interval v) {
  return std::make_shared<SurfacePatch>(SurfacePatch::parse(c, u, v));
}

std::shared_ptr<const StripSource> on(std::shared_ptr<const SurfacePatch> s, const std::string& u,
                                      const std::string& v, Interval t, bool flip = false) {
  return std::make_shared<SurfaceCurveSource>(SurfaceCurveSource::parse(std::move(s), u, v, t, flip));
}

std::shared_ptr<const StripCurve> strip(std::shared_ptr<const StripSource> src,
                                        const StripOptions& options) {
  return std::make_shared<StripCurve>(std::move(src), options);
}

std::shared_ptr<const SurfacePatch> lorentz_cylinder() {
  return family("lorentz_cylinder", {-10, 10}, {-10, 10});
}

}  // namespace

std::vector<FrenetWitness> frenet_witnesses() {
  auto make = [](std::string name, std::array<std::string, 3> c) {
    auto curve = std::make_shared<CurveExpr>(CurveExpr::parse(c, {0, 2}));
    return FrenetWitness{std::move(name), std::make_shared<UnitSpeedCurve>(curve)};
  };
  return {make("circle", {"0", "cos(t)", "sin(t)"}),
          make("hyperbola", {"cosh(t)", "sinh(t)", "0"}),
          make("spacelike helix", {"0.75*t", "cos(1.25*t)", "sin(1.25*t)"}),
          make("timelike helix", {"1.25*t", "cos(0.75*t)", "sin(0.75*t)"})};
}

std::shared_ptr<const StripCurve> cylinder_helix(double a, double b, bool flip,
                                                 StripOptions options) {
  return strip(on(lorentz_cylinder(), format_double(a) + "*t", format_double(b) + "*t", {0, 2}, flip),
               options);
}

std::shared_ptr<const StripCurve> cylinder_circle(bool flip, StripOptions options) {
  return strip(on(lorentz_cylinder(), "0", "t", {0, 2}, flip), options);
}

std::vector<PairWitness> pair_witnesses(StripOptions options) {
  const auto cyl = lorentz_cylinder();
  const auto hcyl = family("hyperbolic_cylinder", {-3, 3}, {-10, 10});
  const auto h2 = family("hyperbolic_plane", {0.1, 3}, {-10, 10});
  const auto plane = family("plane", {-5, 5}, {-5, 5});
  const auto graph_t = patch({"u", "v", "0.3*sin(u)+0.2*v^2+0.1*u*v"}, {-3, 3}, {-3, 3});
  const auto graph_s = patch({"0.25*sin(u)+0.15*cos(1.3*v)+0.1*u*v", "u", "v"}, {-3, 3}, {-3, 3});
  const auto wavy_cyl = patch({"u+0.1*sin(v)", "cos(v)", "sin(v)"}, {-3, 3}, {-10, 10});
  const auto wavy_hcyl = patch({"cosh(u)", "sinh(u)", "v+0.1*sin(u+v)"}, {-3, 3}, {-3, 3});

  const auto hhelix = on(hcyl, "t", "2*t", {0, 1});
  const auto h2_circle = on(h2, "1", "t", {0, 2});
  const double h2_lambda = 1.0 / (2.0 * darboux_at(*h2_circle, 0.0).kg);

  std::vector<PairWitness> w;
  auto add = [&](std::string name, std::string description,
                 std::shared_ptr<const StripSource> src, double lambda, int type) {
    w.push_back({std::move(name), std::move(description), strip(std::move(src), options), lambda,
                 type});
  };
  add("cylinder circle", "circle u = 0 on the Lorentz cylinder", on(cyl, "0", "t", {0, 2}), 0.5,
      5);
  add("spacelike helix", "helix (0.75, 1.25) on the Lorentz cylinder",
      on(cyl, "0.75*t", "1.25*t", {0, 2}), 0.3, 5);
  add("timelike graph, spacelike curve", "generic curve on a timelike graph",
      on(graph_t, "0.3*t+0.05*t^2", "t+0.1*sin(2*t)", {0, 1.5}), 0.3, 5);
  add("timelike helix", "helix (1.25, 0.75) on the Lorentz cylinder",
      on(cyl, "1.25*t", "0.75*t", {0, 2}), 0.3, 3);
  add("timelike graph, timelike curve", "generic timelike curve on a timelike graph",
      on(graph_t, "t+0.1*t^2", "0.3*t+0.1*cos(t)", {0, 1.5}), 0.3, 3);
  add("timelike helix, far offset", "timelike helix offset across the light cone",
      on(cyl, "1.25*t", "0.75*t", {0, 2}), -2.0, 2);
  add("wavy cylinder, far offset", "timelike curve on a perturbed Lorentz cylinder",
      on(wavy_cyl, "1.25*t+0.1*t^2", "0.75*t", {0, 1.5}), -2.0, 2);
  add("hyperbolic helix", "geodesic helix on the hyperbolic cylinder", hhelix, 2.0, 1);
  add("hyperbolic helix, far offset", "hyperbolic helix offset to a timelike partner", hhelix,
      4.0, 4);
  add("wavy hyperbolic cylinder, far offset", "curve on a perturbed hyperbolic cylinder",
      on(wavy_hcyl, "t+0.1*t^2", "2*t", {0, 1}), 4.0, 4);
  add("spacelike graph", "generic curve on a spacelike graph",
      on(graph_s, "0.5*t+0.1*t^2", "0.8*t-0.2*sin(t)", {0, 1.5}), 0.3, 1);
  add("hyperbolic plane, wobble", "non-circular curve on the hyperbolic plane",
      on(h2, "1+0.3*sin(t)", "t", {0, 2}), 0.3, 1);
  add("hyperbolic plane, circle", "circle u = 1 on the hyperbolic plane with k_g1 = 1/(2 lambda)",
      h2_circle, h2_lambda, 1);
  add("geodesic partner", "offset of the hyperbolic helix by -2, paired back onto it",
      std::make_shared<PartnerSource>(hhelix, -2.0), 2.0, 1);
  add("planar ellipse", "ellipse (2 cos t, -sin t) in a spacelike plane",
      on(plane, "2*cos(t)", "-sin(t)", {0, 2}), 0.2, 1);
  return w;
}

std::vector<PairWitness> flipped_witnesses(const std::vector<PairWitness>& ws,
                                           StripOptions options) {
  std::vector<PairWitness> out;
  out.reserve(ws.size());
  for (const PairWitness& w : ws) {
    out.push_back({w.name + ", flipped", w.description + ", normal reversed",
                   strip(std::make_shared<FlippedSource>(w.base->source_ptr()), options),
                   -w.lambda, w.expected_type});
  }
  return out;
}

}  // namespace bdcurves
