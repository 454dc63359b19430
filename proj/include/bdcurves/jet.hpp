#pragma once

// Truncated Taylor series ("jets"): forward-mode differentiation to arbitrary
// order. A first-order jet is an ordinary dual number.

#include <array>
#include <cmath>
#include <span>

#include "bdcurves/lorentz.hpp"

namespace bdcurves {

inline constexpr int kMaxJetOrder = 12;

/// Coefficients c[k] = f^(k)(t0) / k! for k = 0..order.
class Jet {
 public:
  Jet() = default;
  /// A constant of the given order.
  Jet(double value, int order) : order_(order) { c_[0] = value; }

  /// The independent variable t about t0.
  static Jet variable(double t0, int order) {
    Jet j(t0, order);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return order_; }
  double value() const { return c_[0]; }
  double coeff(int k) const { return c_[k]; }
  double& coeff(int k) { return c_[k]; }

  /// k-th derivative at the expansion point.
  double derivative(int k) const;

  /// d/dt as a jet of one lower order.
  Jet differentiate() const;

  Jet truncated(int order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double k);

 private:
  std::array<double, kMaxJetOrder + 1> c_{};
  int order_ = 0;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(const Jet& a, double b);
Jet operator+(double a, const Jet& b);
Jet operator-(const Jet& a, double b);
Jet operator-(double a, const Jet& b);
Jet operator*(const Jet& a, double b);
Jet operator*(double a, const Jet& b);
Jet operator/(const Jet& a, double b);
Jet operator/(double a, const Jet& b);

Jet sqrt(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet tan(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a);
Jet pow(const Jet& a, double p);
Jet pow(const Jet& a, const Jet& p);
Jet atanh(const Jet& a);
Jet atan2(const Jet& y, const Jet& x);

/// f(g(s)) where f is a jet about g.value().
Jet compose(const Jet& f, const Jet& g);

/// Given the speed sigma(t) = ds/dt as a jet about t0, returns t(s) as a jet
/// about s0 = s(t0) of order sigma.order() + 1.
Jet inverse_from_speed(double t0, const Jet& sigma);

using JetVec3 = BasicVec3<Jet>;

JetVec3 constant_vec(const MVec3& v, int order);
MVec3 value(const JetVec3& v);
/// k-th derivative of each component.
MVec3 derivative(const JetVec3& v, int k);
JetVec3 differentiate(const JetVec3& v);
JetVec3 compose(const JetVec3& f, const Jet& g);
int order(const JetVec3& v);

/// v / sqrt(|<v, v>|), the sign of <v, v> taken at the expansion point.
JetVec3 unit(const JetVec3& v);

}  // namespace bdcurves
