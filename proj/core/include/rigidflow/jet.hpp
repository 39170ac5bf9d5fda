#ifndef RIGIDFLOW_JET_HPP
#define RIGIDFLOW_JET_HPP

#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

namespace rigidflow {

// Second-order forward-mode jet in n variables: value, gradient, and
// symmetric Hessian. The Hessian is stored packed (upper triangle only),
// so hess(a,b) and hess(b,a) are the same storage by construction.
//
// Second order is enough for everything downstream: the curvature and
// D-derivative formulas need at most second derivatives of the metric and
// flow components, and at most second derivatives of the frame field.
class Jet2 {
public:
  Jet2() : n_(0), v_(0.0) {}

  static Jet2 constant(std::size_t n, double value) {
    Jet2 j;
    j.n_ = n;
    j.v_ = value;
    j.g_.assign(n, 0.0);
    j.h_.assign(n * (n + 1) / 2, 0.0);
    return j;
  }

  // Seed for the i-th independent variable.
  static Jet2 variable(std::size_t n, std::size_t i, double value) {
    Jet2 j = constant(n, value);
    j.g_[i] = 1.0;
    return j;
  }

  std::size_t dim() const { return n_; }
  double value() const { return v_; }
  double& value() { return v_; }
  double grad(std::size_t a) const { return g_[a]; }
  double& grad(std::size_t a) { return g_[a]; }
  double hess(std::size_t a, std::size_t b) const { return h_[pack(a, b)]; }
  double& hess(std::size_t a, std::size_t b) { return h_[pack(a, b)]; }

  Jet2 operator-() const {
    Jet2 r = *this;
    r.v_ = -r.v_;
    for (auto& x : r.g_) x = -x;
    for (auto& x : r.h_) x = -x;
    return r;
  }

  Jet2& operator+=(const Jet2& o) {
    assert(n_ == o.n_);
    v_ += o.v_;
    for (std::size_t a = 0; a < g_.size(); ++a) g_[a] += o.g_[a];
    for (std::size_t a = 0; a < h_.size(); ++a) h_[a] += o.h_[a];
    return *this;
  }

  Jet2& operator-=(const Jet2& o) {
    assert(n_ == o.n_);
    v_ -= o.v_;
    for (std::size_t a = 0; a < g_.size(); ++a) g_[a] -= o.g_[a];
    for (std::size_t a = 0; a < h_.size(); ++a) h_[a] -= o.h_[a];
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    assert(a.n_ == b.n_);
    Jet2 r = Jet2::constant(a.n_, a.v_ * b.v_);
    for (std::size_t i = 0; i < a.n_; ++i)
      r.g_[i] = a.v_ * b.g_[i] + b.v_ * a.g_[i];
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = i; j < a.n_; ++j, ++k)
        r.h_[k] = a.v_ * b.h_[k] + b.v_ * a.h_[k] + a.g_[i] * b.g_[j] + a.g_[j] * b.g_[i];
    return r;
  }

  // Caller guarantees b.value() != 0 (expression evaluation checks and
  // raises DomainError before dividing).
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    assert(a.n_ == b.n_);
    Jet2 q = Jet2::constant(a.n_, a.v_ / b.v_);
    for (std::size_t i = 0; i < a.n_; ++i)
      q.g_[i] = (a.g_[i] - q.v_ * b.g_[i]) / b.v_;
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = i; j < a.n_; ++j, ++k)
        q.h_[k] = (a.h_[k] - q.v_ * b.h_[k] - q.g_[i] * b.g_[j] - q.g_[j] * b.g_[i]) / b.v_;
    return q;
  }

  friend Jet2 operator*(double s, Jet2 a) {
    a.v_ *= s;
    for (auto& x : a.g_) x *= s;
    for (auto& x : a.h_) x *= s;
    return a;
  }
  friend Jet2 operator*(const Jet2& a, double s) { return s * a; }
  friend Jet2 operator+(Jet2 a, double s) { a.v_ += s; return a; }
  friend Jet2 operator+(double s, Jet2 a) { a.v_ += s; return a; }
  friend Jet2 operator-(Jet2 a, double s) { a.v_ -= s; return a; }
  friend Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }
  friend Jet2 operator/(Jet2 a, double s) { return a * (1.0 / s); }

  // f(u) for scalar f with given first and second derivatives at u.value().
  static Jet2 chain(const Jet2& u, double f, double fp, double fpp) {
    Jet2 r = Jet2::constant(u.n_, f);
    for (std::size_t i = 0; i < u.n_; ++i) r.g_[i] = fp * u.g_[i];
    std::size_t k = 0;
    for (std::size_t i = 0; i < u.n_; ++i)
      for (std::size_t j = i; j < u.n_; ++j, ++k)
        r.h_[k] = fp * u.h_[k] + fpp * u.g_[i] * u.g_[j];
    return r;
  }

private:
  std::size_t pack(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return a * n_ - a * (a - 1) / 2 + (b - a);
  }

  std::size_t n_;
  double v_;
  std::vector<double> g_;
  std::vector<double> h_;
};

inline Jet2 sin(const Jet2& u) {
  return Jet2::chain(u, std::sin(u.value()), std::cos(u.value()), -std::sin(u.value()));
}
inline Jet2 cos(const Jet2& u) {
  return Jet2::chain(u, std::cos(u.value()), -std::sin(u.value()), -std::cos(u.value()));
}
inline Jet2 sinh(const Jet2& u) {
  return Jet2::chain(u, std::sinh(u.value()), std::cosh(u.value()), std::sinh(u.value()));
}
inline Jet2 cosh(const Jet2& u) {
  return Jet2::chain(u, std::cosh(u.value()), std::sinh(u.value()), std::cosh(u.value()));
}
inline Jet2 tanh(const Jet2& u) {
  const double t = std::tanh(u.value());
  const double sech2 = 1.0 - t * t;
  return Jet2::chain(u, t, sech2, -2.0 * t * sech2);
}
inline Jet2 exp(const Jet2& u) {
  const double e = std::exp(u.value());
  return Jet2::chain(u, e, e, e);
}
// Caller guarantees u.value() > 0.
inline Jet2 log(const Jet2& u) {
  const double x = u.value();
  return Jet2::chain(u, std::log(x), 1.0 / x, -1.0 / (x * x));
}
// Caller guarantees u.value() > 0 (the jet is singular at 0).
inline Jet2 sqrt(const Jet2& u) {
  const double s = std::sqrt(u.value());
  return Jet2::chain(u, s, 0.5 / s, -0.25 / (s * s * s));
}

// Integer power by repeated multiplication. Exact for negative and zero
// bases, unlike the exp(log) rewrite used for non-integer exponents.
inline Jet2 pow_int(const Jet2& u, long long p) {
  if (p == 0) return Jet2::constant(u.dim(), 1.0);
  const bool invert = p < 0;
  unsigned long long e = invert ? -(unsigned long long)p : (unsigned long long)p;
  Jet2 acc = u;
  --e;
  Jet2 base = u;
  while (e > 0) {
    if (e & 1ull) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  if (invert) return Jet2::constant(u.dim(), 1.0) / acc;
  return acc;
}

} // namespace rigidflow

#endif
