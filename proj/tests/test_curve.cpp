#include <doctest.h>

#include <cmath>

#include "bdcurves/curve.hpp"
#include "bdcurves/errors.hpp"
#include "bdcurves/witness.hpp"

using namespace bdcurves;

namespace {

std::shared_ptr<const CurveExpr> curve(std::array<std::string, 3> c, Interval d) {
  return std::make_shared<CurveExpr>(CurveExpr::parse(c, d));
}

}  // namespace

TEST_CASE("arc length of a circle with speed 2") {
  const UnitSpeedCurve c(curve({"0", "cos(2*t)", "sin(2*t)"}, {0, M_PI}));
  CHECK(c.length() == doctest::Approx(2 * M_PI).epsilon(1e-12));
  CHECK(c.t_of(M_PI) == doctest::Approx(M_PI / 2).epsilon(1e-10));
}

TEST_CASE("unit-speed input maps to the identity") {
  const UnitSpeedCurve c(curve({"0", "cos(t)", "sin(t)"}, {0, 3}));
  for (double s : uniform_grid({0, 3}, 31)) CHECK(std::fabs(c.t_of(s) - s) <= 1e-10);
}

TEST_CASE("constant-speed helix: s = t sqrt(r^2 - a^2)") {
  const double a = 0.5;
  const double r = 2.0;
  const UnitSpeedCurve c(curve({"0.5*t", "2*cos(t)", "2*sin(t)"}, {0, 4}));
  const double speed = std::sqrt(r * r - a * a);
  for (double t : uniform_grid({0, 4}, 17)) CHECK(c.s_of(t) == doctest::Approx(t * speed).epsilon(1e-10));
}

TEST_CASE("causal types") {
  CHECK(UnitSpeedCurve(curve({"0", "cos(t)", "sin(t)"}, {0, 1})).character().spacelike());
  CHECK(UnitSpeedCurve(curve({"sinh(t)", "cosh(t)", "0"}, {0, 1})).character().timelike());
  // a = 0.5, r = 1.2, b = 1.0: -a^2 + r^2 b^2 = 1.19 > 0
  CHECK(UnitSpeedCurve(curve({"0.5*t", "1.2*cos(t)", "1.2*sin(t)"}, {0, 1})).character().spacelike());
  CHECK_THROWS_AS(UnitSpeedCurve(curve({"t", "t", "0"}, {0, 1})), GeometryError);
  CHECK_THROWS_AS(UnitSpeedCurve(curve({"t^2", "t", "0"}, {0, 1})), GeometryError);
}

TEST_CASE("Frenet data of the circle and the hyperbola at s = 0") {
  const FrenetData c = frenet_frame(UnitSpeedCurve(curve({"0", "cos(t)", "sin(t)"}, {0, 1})), 0.0);
  CHECK(c.k1 == doctest::Approx(1.0));
  CHECK(std::fabs(c.k2) <= 1e-12);
  CHECK(c.epsilon == 1);
  CHECK(c.N.x2 == doctest::Approx(-1.0));

  const FrenetData h = frenet_frame(UnitSpeedCurve(curve({"sinh(t)", "cosh(t)", "0"}, {0, 1})), 0.0);
  CHECK(h.timelike_curve);
  CHECK(h.k1 == doctest::Approx(1.0));
  CHECK(std::fabs(h.k2) <= 1e-12);
  CHECK(h.N.x2 == doctest::Approx(1.0));
}

TEST_CASE("straight line has no Frenet frame") {
  const UnitSpeedCurve line(curve({"0", "t", "2*t"}, {0, 1}));
  try {
    frenet_frame(line, 0.5);
    FAIL("expected DegenerateCurvature");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::DegenerateCurvature);
  }
}

TEST_CASE("helix curvature and torsion against closed forms") {
  // (a s, cos(b s), sin(b s)) with -a^2 + b^2 = 1: x'' = -b^2 (0, cos, sin), so
  // kappa = b^2, and torsion a b from the N' row.
  const double a = 0.75;
  const double b = 1.25;
  const UnitSpeedCurve c(curve({"0.75*t", "cos(1.25*t)", "sin(1.25*t)"}, {0, 2}));
  for (double s : uniform_grid({0, c.length()}, 9)) {
    const FrenetData f = frenet_frame(c, s);
    CHECK(f.k1 == doctest::Approx(b * b).epsilon(1e-12));
    CHECK(f.k2 == doctest::Approx(a * b).epsilon(1e-12));
  }
}

TEST_CASE("Frenet systems hold on the witness curves") {
  for (const FrenetWitness& w : frenet_witnesses()) {
    CAPTURE(w.name);
    double worst = 0.0;
    for (double s : uniform_grid({0.05, w.curve->length() - 0.05}, 64)) {
      worst = std::max(worst, frenet_ode_residual(*w.curve, s));
    }
    CHECK(worst <= 1e-7);
  }
}

TEST_CASE("Frenet frames are orthonormal with the stated signature") {
  for (const FrenetWitness& w : frenet_witnesses()) {
    CAPTURE(w.name);
    const FrenetData f = frenet_frame(*w.curve, 0.5);
    CHECK(std::fabs(inner(f.T, f.N)) <= 1e-12);
    CHECK(std::fabs(inner(f.T, f.B)) <= 1e-12);
    CHECK(std::fabs(inner(f.N, f.B)) <= 1e-12);
    if (f.timelike_curve) {
      CHECK(inner(f.T, f.T) == doctest::Approx(-1.0));
      CHECK(inner(f.N, f.N) == doctest::Approx(1.0));
      CHECK(inner(f.B, f.B) == doctest::Approx(1.0));
    } else {
      CHECK(inner(f.T, f.T) == doctest::Approx(1.0));
      CHECK(inner(f.N, f.N) == doctest::Approx(f.epsilon));
      CHECK(inner(f.B, f.B) == doctest::Approx(-f.epsilon));
    }
  }
}
