#include <doctest.h>

#include <cmath>
#include <random>

#include "bdcurves/errors.hpp"
#include "bdcurves/expr.hpp"

using namespace bdcurves;

namespace {

const std::vector<std::string> kT{"t"};
const std::vector<std::string> kUV{"u", "v"};

double eval_t(const std::string& text, double t) {
  const std::array<double, 1> a{t};
  return Expr::parse(text, kT).evaluate(a);
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(eval_t("1 + 2 * 3", 0) == 7.0);
  CHECK(eval_t("(1 + 2) * 3", 0) == 9.0);
  CHECK(eval_t("2 ^ 3 ^ 2", 0) == 512.0);
  CHECK(eval_t("-2^2", 0) == -4.0);
  CHECK(eval_t("2^-1", 0) == 0.5);
  CHECK(eval_t("8 / 4 / 2", 0) == 1.0);
  CHECK(eval_t("1 - 2 - 3", 0) == -4.0);
  CHECK(eval_t("  t*t  ", 3.0) == 9.0);
}

TEST_CASE("functions and constants") {
  CHECK(eval_t("sin(pi/2)", 0) == doctest::Approx(1.0));
  CHECK(eval_t("cosh(0) + exp(0) + log(e)", 0) == doctest::Approx(3.0));
  CHECK(eval_t("sqrt(4) + tan(0) + tanh(0) + sinh(0) + cos(0)", 0) == doctest::Approx(3.0));
  ConstantTable c = builtin_constants();
  c["a"] = 0.75;
  CHECK(evaluate_constant("2*a", c) == 1.5);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Expr::parse("1 +", kT), ParseError);
  CHECK_THROWS_AS(Expr::parse("sin t", kT), ParseError);
  CHECK_THROWS_AS(Expr::parse("x + 1", kT), ParseError);
  CHECK_THROWS_AS(Expr::parse("(1 + t", kT), ParseError);
  CHECK_THROWS_AS(Expr::parse("foo(t)", kT), ParseError);
  CHECK_THROWS_AS(Expr::parse("1 $ 2", kT), ParseError);
}

TEST_CASE("symbolic partials match jets and finite differences") {
  const Expr f = Expr::parse("sin(u*v) + u^3/(1+v^2) - exp(0.3*u)*cosh(v)", kUV);
  const Expr fu = f.derivative(0);
  const Expr fv = f.derivative(1);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  for (int i = 0; i < 50; ++i) {
    const double u = d(rng);
    const double v = d(rng);
    const double h = 1e-5;
    auto at = [&f](double a, double b) {
      const std::array<double, 2> x{a, b};
      return f.evaluate(x);
    };
    const std::array<double, 2> x{u, v};
    CHECK(fu.evaluate(x) == doctest::Approx((at(u + h, v) - at(u - h, v)) / (2 * h)).epsilon(1e-7));
    CHECK(fv.evaluate(x) == doctest::Approx((at(u, v + h) - at(u, v - h)) / (2 * h)).epsilon(1e-7));

    // A jet along u carries the same first derivative.
    const std::array<Jet, 2> j{Jet::variable(u, 2), Jet(v, 2)};
    CHECK(f.evaluate(j).derivative(1) == doctest::Approx(fu.evaluate(x)).epsilon(1e-12));
  }
}

TEST_CASE("higher jet coefficients") {
  const Expr f = Expr::parse("exp(2*t)", kT);
  const std::array<Jet, 1> j{Jet::variable(0.0, 6)};
  const Jet r = f.evaluate(j);
  for (int k = 0; k <= 6; ++k) CHECK(r.derivative(k) == doctest::Approx(std::pow(2.0, k)));
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  for (int i = 0; i < 2000; ++i) {
    const double v = d(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-7) == "1e-07");
}
