#include <doctest.h>

#include <cmath>

#include "bdcurves/errors.hpp"
#include "bdcurves/strip.hpp"
#include "bdcurves/witness.hpp"

using namespace bdcurves;

namespace {

std::shared_ptr<const SurfacePatch> patch(std::array<std::string, 3> c, Interval u, Interval v) {
  return std::make_shared<SurfacePatch>(SurfacePatch::parse(c, u, v));
}

std::shared_ptr<const SurfaceCurveSource> on(std::shared_ptr<const SurfacePatch> s,
                                             const std::string& u, const std::string& v,
                                             Interval t, bool flip = false) {
  return std::make_shared<SurfaceCurveSource>(SurfaceCurveSource::parse(std::move(s), u, v, t, flip));
}

bool parallel(const MVec3& a, const MVec3& b, double tol) {
  return max_abs_component(cross(a, b)) <= tol;
}

struct OracleCase {
  const char* name;
  std::array<std::string, 3> surface;
  std::string u, v;
  double t;
  double kg, kn, tg;  // from tests/oracles/darboux_oracle.py
};

const std::array<std::string, 3> kGraphT{"u", "v", "0.3*sin(u)+0.2*v^2+0.1*u*v"};
const std::array<std::string, 3> kGraphS{"0.25*sin(u)+0.15*cos(1.3*v)+0.1*u*v", "u", "v"};
const std::array<std::string, 3> kH2{"cosh(u)", "sinh(u)*cos(v)", "sinh(u)*sin(v)"};

const OracleCase kOracle[] = {
    {"timelike graph, spacelike curve", kGraphT, "0.3*t+0.05*t^2", "t+0.1*sin(2*t)", 0.4,
     -0.05481281486769889, 0.4735437846657339, -0.19152799348565755},
    {"timelike graph, timelike curve", kGraphT, "t+0.1*t^2", "0.3*t+0.1*cos(t)", 0.9,
     -0.14488117971746914, 0.21683119040505258, 0.12026381585523371},
    {"spacelike graph", kGraphS, "0.5*t+0.1*t^2", "0.8*t-0.2*sin(t)", 0.7, 0.07633834901777904,
     -0.060239144131906765, 0.06280164198411384},
    {"hyperbolic plane wobble", kH2, "1+0.3*sin(t)", "t", 0.5, -1.3144244122209974, 1.0, 0.0},
};

}  // namespace

TEST_CASE("surface normals") {
  const auto cyl = patch({"v", "cos(u)", "sin(u)"}, {-3, 3}, {-3, 3});
  for (double u : {-1.0, 0.2, 2.5}) {
    const MVec3 n = surface_normal(*cyl, u, 0.7);
    CHECK(parallel(n, {0, std::cos(u), std::sin(u)}, 1e-12));
  }
  CHECK(surface_causal_type(*cyl) == SurfaceKind::TimelikeSurface);

  const SurfacePatch h2 = SurfacePatch::family("hyperbolic_plane", {}, {0.2, 2}, {-3, 3});
  CHECK(parallel(surface_normal(h2, 0.8, 1.1), h2.position(0.8, 1.1), 1e-12));
  CHECK(surface_causal_type(h2) == SurfaceKind::SpacelikeSurface);

  const SurfacePatch plane = SurfacePatch::family("plane", {}, {-1, 1}, {-1, 1});
  CHECK(parallel(surface_normal(plane, 0.3, 0.4), kE1, 1e-15));
  CHECK(surface_causal_type(plane) == SurfaceKind::SpacelikeSurface);
}

TEST_CASE("a patch whose normal changes character is rejected") {
  // (u, v, u^2): the normal is timelike where |2u| > 1 and spacelike elsewhere.
  const auto s = patch({"u", "v", "u^2"}, {-0.3, 1.1}, {-1, 1});
  try {
    surface_causal_type(*s);
    FAIL("expected MixedCharacter");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::MixedCharacter);
  }
}

TEST_CASE("circle and helix on the Lorentz cylinder") {
  const StripCurve circle(on(patch({"u", "cos(v)", "sin(v)"}, {-5, 5}, {-10, 10}), "0", "t", {0, 2}));
  for (double s : uniform_grid({0, circle.length()}, 7)) {
    const DarbouxData d = darboux_frame(circle, s);
    CHECK(std::fabs(d.kg) <= 1e-12);
    CHECK(d.kn == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(d.tg) <= 1e-12);
  }
  for (auto [a, b] : {std::pair{0.75, 1.25}, std::pair{std::sinh(0.4), std::cosh(0.4)}}) {
    auto h = cylinder_helix(a, b);
    for (double s : uniform_grid({0, h->length()}, 7)) {
      const DarbouxData d = darboux_frame(*h, s);
      CHECK(std::fabs(d.kg) <= 1e-9);
      CHECK(d.kn == doctest::Approx(b * b).epsilon(1e-9));
      CHECK(d.tg == doctest::Approx(-a * b).epsilon(1e-9));
    }
  }
  // A ruling is a straight line with a constant normal.
  const StripCurve ruling(on(patch({"u", "cos(v)", "sin(v)"}, {-5, 5}, {-10, 10}), "t", "0", {0, 1}));
  const DarbouxData r = darboux_frame(ruling, 0.5);
  CHECK(std::fabs(r.kg) + std::fabs(r.kn) + std::fabs(r.tg) <= 1e-12);
}

TEST_CASE("generic strips against the symbolic oracle") {
  for (const OracleCase& c : kOracle) {
    CAPTURE(c.name);
    const auto src = on(patch(c.surface, {-3, 3}, {-3, 3}), c.u, c.v, {0, 1.5});
    const DarbouxData d = darboux_at(*src, c.t);
    CHECK(d.kg == doctest::Approx(c.kg).epsilon(1e-9).scale(1.0));
    CHECK(d.kn == doctest::Approx(c.kn).epsilon(1e-9).scale(1.0));
    CHECK(d.tg == doctest::Approx(c.tg).epsilon(1e-9).scale(1.0));

    // The calibrated sign table turns the triple products into the same values.
    const TripleProductSigns sg = triple_product_signs(d.darboux_case);
    CHECK(sg.kg * d.kg_triple == doctest::Approx(c.kg).epsilon(1e-8).scale(1.0));
    CHECK(sg.tg * d.tg_triple == doctest::Approx(c.tg).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("triple product sign table") {
  CHECK(triple_product_signs(DarbouxCase::TimelikeSurfaceSpacelikeCurve).kg == -1);
  CHECK(triple_product_signs(DarbouxCase::TimelikeSurfaceSpacelikeCurve).tg == 1);
  CHECK(triple_product_signs(DarbouxCase::TimelikeSurfaceTimelikeCurve).kg == 1);
  CHECK(triple_product_signs(DarbouxCase::TimelikeSurfaceTimelikeCurve).tg == -1);
  CHECK(triple_product_signs(DarbouxCase::SpacelikeSurface).kg == 1);
  CHECK(triple_product_signs(DarbouxCase::SpacelikeSurface).tg == -1);
}

TEST_CASE("Darboux equations hold along every witness strip") {
  for (const PairWitness& w : pair_witnesses()) {
    CAPTURE(w.name);
    const StripCurve& sc = *w.base;
    const double h = 1e-3;
    double worst = 0.0;
    for (double s : uniform_grid({0.05, sc.length() - 0.05}, 16)) {
      const DarbouxData d = darboux_frame(sc, s);
      std::array<DarbouxData, 4> st{darboux_frame(sc, s - 2 * h), darboux_frame(sc, s - h),
                                    darboux_frame(sc, s + h), darboux_frame(sc, s + 2 * h)};
      auto fd = [&](MVec3 DarbouxData::*f) {
        return (st[0].*f - 8.0 * (st[1].*f) + 8.0 * (st[2].*f) - st[3].*f) / (12.0 * h);
      };
      const MVec3 dT = fd(&DarbouxData::T);
      const MVec3 dg = fd(&DarbouxData::g);
      const MVec3 dn = fd(&DarbouxData::n);
      MVec3 rT, rg, rn;
      if (d.darboux_case == DarbouxCase::SpacelikeSurface) {
        rT = dT - (d.kg * d.g + d.kn * d.n);
        rg = dg - (-d.kg * d.T + d.tg * d.n);
        rn = dn - (d.kn * d.T + d.tg * d.g);
      } else {
        const double e = d.epsilon;
        rT = dT - (d.kg * d.g - e * d.kn * d.n);
        rg = dg - (d.kg * d.T + e * d.tg * d.n);
        rn = dn - (d.kn * d.T + d.tg * d.g);
      }
      worst = std::max({worst, max_abs_component(rT), max_abs_component(rg), max_abs_component(rn)});
    }
    CHECK(worst <= 1e-7);
  }
}

TEST_CASE("Darboux frame signature") {
  for (const PairWitness& w : pair_witnesses()) {
    CAPTURE(w.name);
    const DarbouxData d = darboux_frame(*w.base, 0.3 * w.base->length());
    CHECK(std::fabs(inner(d.T, d.g)) <= 1e-12);
    CHECK(std::fabs(inner(d.T, d.n)) <= 1e-12);
    CHECK(std::fabs(inner(d.g, d.n)) <= 1e-12);
    CHECK(inner(d.T, d.T) == doctest::Approx(d.epsilon));
    const double nn = inner(d.n, d.n);
    CHECK(std::fabs(std::fabs(nn) - 1.0) <= 1e-12);
    CHECK(parallel(cross(d.n, d.T), d.g, 1e-12));
  }
}

TEST_CASE("reversing the normal flips k_g and k_n and keeps tau_g") {
  for (const PairWitness& w : pair_witnesses()) {
    CAPTURE(w.name);
    const StripCurve flipped(std::make_shared<FlippedSource>(w.base->source_ptr()));
    for (double s : uniform_grid({0, w.base->length()}, 5)) {
      const DarbouxData a = darboux_frame(*w.base, s);
      const DarbouxData b = darboux_frame(flipped, s);
      CHECK(b.kg == doctest::Approx(-a.kg).epsilon(1e-12).scale(1.0));
      CHECK(b.kn == doctest::Approx(-a.kn).epsilon(1e-12).scale(1.0));
      CHECK(b.tg == doctest::Approx(a.tg).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("a surface curve and the same curve with the normal as a field agree") {
  const auto a = cylinder_helix(0.75, 1.25);
  const std::array<Expr, 3> field{Expr::parse("0", std::vector<std::string>{"t"}),
                                  Expr::parse("cos(1.25*t)", std::vector<std::string>{"t"}),
                                  Expr::parse("sin(1.25*t)", std::vector<std::string>{"t"})};
  const StripCurve b(std::make_shared<FieldStripSource>(
      CurveExpr::parse({"0.75*t", "cos(1.25*t)", "sin(1.25*t)"}, {0, 2}), NormalMode::Field, field));
  for (double s : uniform_grid({0, a->length()}, 9)) {
    const DarbouxData x = darboux_frame(*a, s);
    const DarbouxData y = darboux_frame(b, s);
    CHECK(std::fabs(x.kg - y.kg) <= 1e-10);
    CHECK(std::fabs(x.kn - y.kn) <= 1e-10);
    CHECK(std::fabs(x.tg - y.tg) <= 1e-10);
  }
}

TEST_CASE("line classes") {
  CHECK(to_string(classify_line(*cylinder_circle())) == "geodesic, principal line");
  CHECK(to_string(classify_line(*cylinder_helix(0.75, 1.25))) == "geodesic");
  const auto plane = std::make_shared<SurfacePatch>(SurfacePatch::family("plane", {}, {-5, 5}, {-5, 5}));
  const StripCurve ellipse(on(plane, "2*cos(t)", "-sin(t)", {0, 2}));
  const LineClass c = classify_line(ellipse);
  CHECK(c.asymptotic);
  CHECK(c.principal);
  CHECK_FALSE(c.geodesic);
}

TEST_CASE("Frenet and Darboux frames are linked by one angle") {
  auto h = cylinder_helix(0.75, 1.25);
  for (double s : uniform_grid({0.1, h->length() - 0.1}, 5)) {
    const FrenetDarbouxLink l = frenet_darboux_link(*h, s);
    for (double r : l.residual) CHECK(std::fabs(r) <= 1e-8);
  }
  // In a spacelike plane with n = e1 the frames coincide: phi = 0, k_g = kappa.
  const auto plane = std::make_shared<SurfacePatch>(SurfacePatch::family("plane", {}, {-5, 5}, {-5, 5}));
  const StripCurve ellipse(on(plane, "2*cos(t)", "-sin(t)", {0, 2}));
  for (double s : uniform_grid({0.1, ellipse.length() - 0.1}, 5)) {
    const FrenetDarbouxLink l = frenet_darboux_link(ellipse, s);
    const DarbouxData d = darboux_frame(ellipse, s);
    const FrenetData f = frenet_frame(ellipse.curve(), s);
    CHECK(std::fabs(l.phi) <= 1e-12);
    CHECK(d.kg == doctest::Approx(f.k1).epsilon(1e-10));
    CHECK(std::fabs(d.tg) <= 1e-10);
  }
}
