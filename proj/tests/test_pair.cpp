#include <doctest.h>

#include <cmath>

#include "bdcurves/errors.hpp"
#include "bdcurves/witness.hpp"

using namespace bdcurves;

namespace {

PairRecord pair_of(const PairWitness& w, int grid = 256) {
  PairOptions po;
  po.grid = grid;
  return build_pair(w.base, w.lambda, po);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("no GeometryError raised");
  return ErrorCode::OutOfDomain;
}

const Residual* find(const std::vector<Residual>& ledger, const std::string& name,
                     const std::string& variant = "") {
  for (const Residual& r : ledger) {
    if (r.name == name && r.variant == variant) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("pair type table") {
  using S = SurfaceKind;
  using C = Causal;
  CHECK(pair_type(S::SpacelikeSurface, C::Spacelike, S::SpacelikeSurface, C::Spacelike) == 1);
  CHECK(pair_type(S::SpacelikeSurface, C::Spacelike, S::TimelikeSurface, C::Timelike) == 2);
  CHECK(pair_type(S::TimelikeSurface, C::Timelike, S::TimelikeSurface, C::Timelike) == 3);
  CHECK(pair_type(S::TimelikeSurface, C::Timelike, S::SpacelikeSurface, C::Spacelike) == 4);
  CHECK(pair_type(S::TimelikeSurface, C::Spacelike, S::TimelikeSurface, C::Spacelike) == 5);
  CHECK(code_of([] {
          pair_type(S::TimelikeSurface, C::Spacelike, S::SpacelikeSurface, C::Spacelike);
        }) == ErrorCode::UnsupportedCombination);
  CHECK(code_of([] {
          pair_type(S::TimelikeSurface, C::Null, S::TimelikeSurface, C::Spacelike);
        }) == ErrorCode::UnsupportedCombination);
}

TEST_CASE("every catalog pair has its expected type and satisfies the definition") {
  for (const PairWitness& w : pair_witnesses()) {
    CAPTURE(w.name);
    const PairRecord p = pair_of(w);
    CHECK(p.type == w.expected_type);
    CHECK(pair_type(p) == p.type);
    CHECK(p.lambda_deviation <= 1e-9);
    CHECK(p.max_g_coincidence <= 1e-8);
    for (const Residual& r : verify_definition(p)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
    for (const Residual& r : verify_angle_relations(p)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("the circle on the Lorentz cylinder offsets along the axis") {
  const PairRecord p = build_pair(cylinder_circle(), 0.5);
  CHECK(p.type == 5);
  for (std::size_t i = 0; i < p.s1.size(); i += 37) {
    const double t = p.t[i];
    const MVec3 expect{0.5, std::cos(t), std::sin(t)};
    CHECK(max_abs_component(p.partner_frames[i].position - expect) <= 1e-12);
    CHECK(max_abs_component(p.base_frames[i].g - kE1) <= 1e-12);
    CHECK(std::fabs(p.theta[i]) <= 1e-12);
    CHECK(p.ratio[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("construction errors") {
  const auto circle = cylinder_circle();
  CHECK(code_of([&] { build_pair(circle, 0.0); }) == ErrorCode::ZeroLambda);

  const auto flipped = flipped_witnesses(pair_witnesses());
  for (const PairWitness& w : flipped) {
    if (w.expected_type != 2 && w.expected_type != 4) continue;
    CAPTURE(w.name);
    CHECK(code_of([&] { build_pair(w.base, w.lambda); }) == ErrorCode::SingularOffset);
  }

  const PairRecord p = build_pair(circle, 0.5);
  CHECK(code_of([&] { verify_line_class_forms(p); }) == ErrorCode::PreconditionNotMet);
  CHECK(code_of([&] { verify_bertrand_special_case(p); }) == ErrorCode::PreconditionNotMet);
}

TEST_CASE("reversing the base normal with lambda negated gives the same partner") {
  const auto ws = pair_witnesses();
  const auto fs = flipped_witnesses(ws);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (ws[i].expected_type == 2 || ws[i].expected_type == 4) continue;
    CAPTURE(ws[i].name);
    const PairRecord a = pair_of(ws[i], 64);
    const PairRecord b = pair_of(fs[i], 64);
    CHECK(b.type == a.type);
    for (std::size_t k = 0; k < a.s1.size(); ++k) {
      CHECK(max_abs_component(a.partner_frames[k].position - b.partner_frames[k].position) <= 1e-12);
      CHECK(b.theta[k] == doctest::Approx(-a.theta[k]).epsilon(1e-12).scale(1.0));
      CHECK(b.kg1[k] == doctest::Approx(-a.kg1[k]).epsilon(1e-12).scale(1.0));
      CHECK(b.tg1[k] == doctest::Approx(a.tg1[k]).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("re-derived identity forms hold on every witness") {
  for (const PairWitness& w : pair_witnesses()) {
    CAPTURE(w.name);
    for (const Residual& r : residual_ledger(pair_of(w))) {
      if (r.variant != "corrected") continue;
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("identities that hold as printed") {
  for (const PairWitness& w : pair_witnesses()) {
    CAPTURE(w.name);
    const auto ledger = residual_ledger(pair_of(w));
    CHECK(find(ledger, "frame relation k_g")->pass);
    if (w.expected_type == 1 || w.expected_type == 3 || w.expected_type == 5) {
      CHECK(tau_rate_winner(ledger) != "none");
    }
    if (w.expected_type == 5) {
      const Residual* alt = find(ledger, "k_g tau_g bilinear", "alternating form");
      REQUIRE(alt);
      CHECK(alt->pass);
    }
  }
}

TEST_CASE("principal product on the hyperbolic-plane circle") {
  const auto ws = pair_witnesses();
  for (const PairWitness& w : ws) {
    if (w.name != "hyperbolic plane, circle") continue;
    const auto ledger = residual_ledger(pair_of(w));
    CHECK(find(ledger, "principal product constancy")->pass);
    CHECK(find(ledger, "principal product value", "+1/lambda")->pass);
    CHECK_FALSE(find(ledger, "principal product value", "-1/lambda")->pass);
  }
}

TEST_CASE("residual pass rule") {
  const std::vector<double> lhs{0, 0, 1.0, 2.0, 3.0, 0, 0};
  std::vector<double> rhs = lhs;
  rhs[3] += 2.5e-7;
  const Residual r = make_residual("x", "", lhs, rhs, 1e-7);
  CHECK(r.max_abs == doctest::Approx(2.5e-7));
  CHECK(r.scale == doctest::Approx(3.0));
  CHECK(r.pass);  // 2.5e-7 <= 1e-7 * 3
  rhs[3] = lhs[3] + 3.5e-7;
  CHECK_FALSE(make_residual("x", "", lhs, rhs, 1e-7).pass);

  // Below unit scale the tolerance is absolute.
  const std::vector<double> small{0, 0, 1e-3, 1e-3, 1e-3, 0, 0};
  std::vector<double> off = small;
  off[2] += 2e-7;
  CHECK_FALSE(make_residual("y", "", small, off, 1e-7).pass);
}

TEST_CASE("five-point differences are exact on quartics") {
  const double h = 0.1;
  std::vector<double> f, df;
  for (int i = 0; i < 21; ++i) {
    const double x = -1.0 + i * h;
    f.push_back(x * x * x * x - 2 * x * x * x + x - 3);
    df.push_back(4 * x * x * x - 6 * x * x + 1);
  }
  const std::vector<double> d = central_difference(f, h);
  REQUIRE(d.size() == f.size());
  CHECK(d[0] == 0.0);
  CHECK(d[1] == 0.0);
  CHECK(d[19] == 0.0);
  CHECK(d[20] == 0.0);
  for (int i = 2; i < 19; ++i) CHECK(d[i] == doctest::Approx(df[i]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("the measured angle matches the frame") {
  for (const PairWitness& w : pair_witnesses()) {
    CAPTURE(w.name);
    const PairRecord p = pair_of(w, 64);
    const double s1 = p.s1[20];
    const ThetaRatio tr = theta_and_speed_ratio(p, s1);
    CHECK(tr.theta == doctest::Approx(p.theta[20]).epsilon(1e-10).scale(1.0));
    CHECK(tr.ratio == doctest::Approx(p.ratio[20]).epsilon(1e-10));
  }
}
