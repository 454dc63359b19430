#include "bdcurves/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdcurves {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Jet integrate(const Jet& d, double c0) {
  Jet r(c0, d.order() + 1);
  for (int k = 0; k <= d.order(); ++k) r.coeff(k + 1) = d.coeff(k) / (k + 1);
  return r;
}

}  // namespace

double Jet::derivative(int k) const {
  if (k > order_) throw std::out_of_range("jet derivative beyond its order");
  return c_[k] * factorial(k);
}

Jet Jet::differentiate() const {
  if (order_ == 0) throw std::out_of_range("cannot differentiate an order-0 jet");
  Jet r(0.0, order_ - 1);
  for (int k = 0; k < order_; ++k) r.c_[k] = (k + 1) * c_[k + 1];
  return r;
}

Jet Jet::truncated(int order) const {
  Jet r = *this;
  r.order_ = std::min(order_, order);
  for (int k = r.order_ + 1; k <= kMaxJetOrder; ++k) r.c_[k] = 0.0;
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(double k) {
  for (int i = 0; i <= order_; ++i) c_[i] *= k;
  return *this;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r = a;
  return r += b;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r = a;
  return r -= b;
}

Jet operator-(const Jet& a) {
  Jet r = a;
  return r *= -1.0;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  Jet r(0.0, n);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += a.coeff(i) * b.coeff(k - i);
    r.coeff(k) = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  Jet q(0.0, n);
  const double b0 = b.coeff(0);
  for (int k = 0; k <= n; ++k) {
    double s = a.coeff(k);
    for (int i = 1; i <= k; ++i) s -= b.coeff(i) * q.coeff(k - i);
    q.coeff(k) = s / b0;
  }
  return q;
}

Jet operator+(const Jet& a, double b) {
  Jet r = a;
  r.coeff(0) += b;
  return r;
}
Jet operator+(double a, const Jet& b) { return b + a; }
Jet operator-(const Jet& a, double b) { return a + (-b); }
Jet operator-(double a, const Jet& b) { return (-b) + a; }
Jet operator*(const Jet& a, double b) {
  Jet r = a;
  return r *= b;
}
Jet operator*(double a, const Jet& b) { return b * a; }
Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
Jet operator/(double a, const Jet& b) { return Jet(a, b.order()) / b; }

Jet sqrt(const Jet& a) {
  const int n = a.order();
  Jet r(std::sqrt(a.value()), n);
  const double r0 = r.value();
  for (int k = 1; k <= n; ++k) {
    double s = a.coeff(k);
    for (int i = 1; i < k; ++i) s -= r.coeff(i) * r.coeff(k - i);
    r.coeff(k) = s / (2.0 * r0);
  }
  return r;
}

Jet exp(const Jet& a) {
  const int n = a.order();
  Jet e(std::exp(a.value()), n);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += i * a.coeff(i) * e.coeff(k - i);
    e.coeff(k) = s / k;
  }
  return e;
}

Jet log(const Jet& a) {
  const int n = a.order();
  Jet l(std::log(a.value()), n);
  const double a0 = a.value();
  for (int k = 1; k <= n; ++k) {
    double s = a.coeff(k);
    for (int i = 1; i < k; ++i) s -= (static_cast<double>(i) / k) * l.coeff(i) * a.coeff(k - i);
    l.coeff(k) = s / a0;
  }
  return l;
}

namespace {

// Coupled recurrences for (sin, cos) when sign = -1 and (sinh, cosh) when +1.
void trig_pair(const Jet& a, double sign, Jet& s, Jet& c) {
  const int n = a.order();
  if (sign < 0) {
    s = Jet(std::sin(a.value()), n);
    c = Jet(std::cos(a.value()), n);
  } else {
    s = Jet(std::sinh(a.value()), n);
    c = Jet(std::cosh(a.value()), n);
  }
  for (int k = 1; k <= n; ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (int i = 1; i <= k; ++i) {
      ss += i * a.coeff(i) * c.coeff(k - i);
      cc += i * a.coeff(i) * s.coeff(k - i);
    }
    s.coeff(k) = ss / k;
    c.coeff(k) = sign * cc / k;
  }
}

}  // namespace

Jet sin(const Jet& a) {
  Jet s, c;
  trig_pair(a, -1.0, s, c);
  return s;
}

Jet cos(const Jet& a) {
  Jet s, c;
  trig_pair(a, -1.0, s, c);
  return c;
}

Jet tan(const Jet& a) {
  Jet s, c;
  trig_pair(a, -1.0, s, c);
  return s / c;
}

Jet sinh(const Jet& a) {
  Jet s, c;
  trig_pair(a, 1.0, s, c);
  return s;
}

Jet cosh(const Jet& a) {
  Jet s, c;
  trig_pair(a, 1.0, s, c);
  return c;
}

Jet tanh(const Jet& a) {
  Jet s, c;
  trig_pair(a, 1.0, s, c);
  return s / c;
}

Jet pow(const Jet& a, double p) {
  const int n = a.order();
  const double rounded = std::round(p);
  if (p == rounded && p >= 0.0 && p <= 64.0) {
    auto e = static_cast<int>(rounded);
    Jet result(1.0, n);
    Jet base = a;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }
  // y = a^p satisfies a y' = p a' y.
  const double a0 = a.value();
  Jet y(std::pow(a0, p), n);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += (p * i - (k - i)) * a.coeff(i) * y.coeff(k - i);
    y.coeff(k) = s / (k * a0);
  }
  return y;
}

Jet pow(const Jet& a, const Jet& p) {
  bool constant_exponent = true;
  for (int k = 1; k <= p.order(); ++k) constant_exponent = constant_exponent && p.coeff(k) == 0.0;
  if (constant_exponent) return pow(a.truncated(p.order()), p.value());
  return exp(p * log(a));
}

Jet atanh(const Jet& a) {
  if (a.order() == 0) return Jet(std::atanh(a.value()), 0);
  const Jet d = a.differentiate() / (1.0 - a.truncated(a.order() - 1) * a.truncated(a.order() - 1));
  return integrate(d, std::atanh(a.value()));
}

Jet atan2(const Jet& y, const Jet& x) {
  const int n = std::min(y.order(), x.order());
  if (n == 0) return Jet(std::atan2(y.value(), x.value()), 0);
  const Jet yl = y.truncated(n - 1);
  const Jet xl = x.truncated(n - 1);
  const Jet d = (xl * y.differentiate() - yl * x.differentiate()) / (xl * xl + yl * yl);
  return integrate(d, std::atan2(y.value(), x.value()));
}

Jet compose(const Jet& f, const Jet& g) {
  const int n = std::min(f.order(), g.order());
  Jet h = g.truncated(n);
  h.coeff(0) = 0.0;
  Jet result(f.coeff(0), n);
  Jet power(1.0, n);
  for (int j = 1; j <= n; ++j) {
    power = power * h;
    result += f.coeff(j) * power;
  }
  return result;
}

Jet inverse_from_speed(double t0, const Jet& sigma) {
  const int n = sigma.order();
  Jet t(t0, n + 1);
  // dt/ds = 1 / sigma(t(s)); coefficient k+1 of t depends only on coefficients
  // up to k of 1/sigma(t(s)), which in turn uses t up to order k.
  for (int k = 0; k <= n; ++k) {
    const Jet w = 1.0 / compose(sigma.truncated(k), t.truncated(k));
    t.coeff(k + 1) = w.coeff(k) / (k + 1);
  }
  return t;
}

JetVec3 constant_vec(const MVec3& v, int order) {
  return {Jet(v.x1, order), Jet(v.x2, order), Jet(v.x3, order)};
}

MVec3 value(const JetVec3& v) { return {v.x1.value(), v.x2.value(), v.x3.value()}; }

MVec3 derivative(const JetVec3& v, int k) {
  return {v.x1.derivative(k), v.x2.derivative(k), v.x3.derivative(k)};
}

JetVec3 differentiate(const JetVec3& v) {
  return {v.x1.differentiate(), v.x2.differentiate(), v.x3.differentiate()};
}

JetVec3 compose(const JetVec3& f, const Jet& g) {
  return {compose(f.x1, g), compose(f.x2, g), compose(f.x3, g)};
}

int order(const JetVec3& v) { return std::min({v.x1.order(), v.x2.order(), v.x3.order()}); }

JetVec3 unit(const JetVec3& v) {
  const Jet q = inner(v, v);
  const Jet m = q.value() < 0.0 ? sqrt(-q) : sqrt(q);
  return v / m;
}

}  // namespace bdcurves
