#include <doctest.h>

#include <cmath>
#include <random>

#include "bdcurves/errors.hpp"
#include "bdcurves/lorentz.hpp"

using namespace bdcurves;

namespace {

double det(const MVec3& a, const MVec3& b, const MVec3& c) {
  return a.x1 * (b.x2 * c.x3 - b.x3 * c.x2) - a.x2 * (b.x1 * c.x3 - b.x3 * c.x1) +
         a.x3 * (b.x1 * c.x2 - b.x2 * c.x1);
}

bool same(const MVec3& a, const MVec3& b, double tol = 0.0) {
  return std::fabs(a.x1 - b.x1) <= tol && std::fabs(a.x2 - b.x2) <= tol &&
         std::fabs(a.x3 - b.x3) <= tol;
}

MVec3 random_vec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("inner product has signature (-, +, +)") {
  CHECK(inner(MVec3{1, 0, 0}, MVec3{1, 0, 0}) == -1.0);
  CHECK(inner(MVec3{0, 1, 0}, MVec3{0, 1, 0}) == 1.0);
  CHECK(inner(MVec3{1, 1, 0}, MVec3{1, 1, 0}) == 0.0);
}

TEST_CASE("basis vector products") {
  CHECK(same(cross(kE1, kE2), -kE3));
  CHECK(same(cross(kE2, kE3), kE1));
  CHECK(same(cross(kE3, kE1), -kE2));
  const MVec3 x{0.3, -1.2, 2.0};
  CHECK(same(cross(x, x), MVec3{0, 0, 0}));
}

TEST_CASE("vector product properties over random pairs") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    const MVec3 x = random_vec(rng);
    const MVec3 y = random_vec(rng);
    const MVec3 z = random_vec(rng);
    const MVec3 c = cross(x, y);
    const double scale = euclidean_norm(x) * euclidean_norm(y);
    REQUIRE(same(c, -cross(y, x), 1e-15 * scale));
    REQUIRE(std::fabs(inner(c, x)) <= 1e-12 * scale * euclidean_norm(x));
    REQUIRE(std::fabs(inner(c, y)) <= 1e-12 * scale * euclidean_norm(y));
    // <x × y, z> = -det(x, y, z)
    REQUIRE(std::fabs(inner(c, z) + det(x, y, z)) <= 1e-12 * scale * euclidean_norm(z));
    // Lagrange identity in the Lorentz metric.
    const double lhs = inner(c, c);
    const double rhs = inner(x, y) * inner(x, y) - inner(x, x) * inner(y, y);
    REQUIRE(std::fabs(lhs - rhs) <= 1e-12 * scale * scale);
  }
}

TEST_CASE("causal character") {
  const CausalCharacter a = causal_character({1, 0, 0});
  CHECK(a.timelike());
  CHECK(a.orientation == TimeOrientation::FuturePointing);
  CHECK(causal_character({-2, 0.5, 0}).orientation == TimeOrientation::PastPointing);
  CHECK(causal_character({1, 1, 0}).null());
  CHECK(causal_character({0.5, 1, 0}).spacelike());
  CHECK(causal_character({0, 0, 0}).degenerate);
}

TEST_CASE("norm and normalize") {
  CHECK(norm({3, 0, 0}) == doctest::Approx(3.0));
  CHECK(same(normalize({0, 2, 0}), kE2));
  try {
    normalize({1, 1, 0});
    FAIL("expected NullVector");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::NullVector);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const MVec3 v = random_vec(rng);
    if (causal_character(v, 1e-3).null()) continue;
    CHECK(std::fabs(std::fabs(inner(normalize(v), normalize(v))) - 1.0) <= 1e-12);
  }
}

TEST_CASE("lorentz angles") {
  const LorentzAngle h = lorentz_angle({std::cosh(1.0), std::sinh(1.0), 0}, {1, 0, 0});
  CHECK(h.kind == AngleKind::Hyperbolic);
  CHECK(h.theta == doctest::Approx(1.0).epsilon(1e-12));

  const LorentzAngle s = lorentz_angle({0, 1, 0}, {0, std::cos(0.3), std::sin(0.3)});
  CHECK(s.kind == AngleKind::Spacelike);
  CHECK(s.theta == doctest::Approx(0.3).epsilon(1e-12));

  const LorentzAngle l = lorentz_angle({0, 1, 0}, {std::cosh(0.7), std::sinh(0.7), 0});
  CHECK(l.kind == AngleKind::LorentzianTimelike);
  CHECK(l.theta == doctest::Approx(0.7).epsilon(1e-12));

  // Two spacelike vectors spanning a timelike plane.
  const LorentzAngle c = lorentz_angle({0, 1, 0}, {std::sinh(0.4), std::cosh(0.4), 0});
  CHECK(c.kind == AngleKind::Central);
  CHECK(c.theta == doctest::Approx(0.4).epsilon(1e-12));

  try {
    lorentz_angle({1, 0, 0}, {-1, 0.2, 0});
    FAIL("expected OppositeTimeOrientation");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::OppositeTimeOrientation);
  }
}

TEST_CASE("angles reproduce the inner product") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const MVec3 x = random_vec(rng);
    const MVec3 y = random_vec(rng);
    if (causal_character(x, 1e-3).null() || causal_character(y, 1e-3).null()) continue;
    LorentzAngle a;
    try {
      a = lorentz_angle(x, y);
    } catch (const GeometryError&) {
      continue;  // opposite time orientation or a degenerate span
    }
    CHECK(reconstruct_inner(a, norm(x), norm(y)) ==
          doctest::Approx(inner(x, y)).epsilon(1e-9).scale(1.0));
    ++checked;
  }
  CHECK(checked > 500);
}
