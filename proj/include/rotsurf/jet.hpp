#pragma once

// Bivariate truncated Taylor series in the chart parameters (u, v).
//
// A Jet2 stores c[a][b] = d^{a+b} f / du^a dv^b / (a! b!) at a base point for
// all a + b <= 3.  Products are Cauchy convolutions truncated at total
// degree 3; smooth outer functions are applied by composing their univariate
// Taylor polynomial with the non-constant part of the argument.
//
// Differentiating a jet (d_du, d_dv) lowers its trustworthy degree by one.
// The top-degree slots of the result are set to zero, so a quantity built
// from k-th derivatives of a degree-3 chart jet is exact up to degree 3 - k.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "rotsurf/error.hpp"

namespace rotsurf {

inline constexpr int kJetDegree = 3;
inline constexpr std::size_t kJetSize = 10;
inline constexpr double kDenominatorGuard = 1e-12;

class Jet2 {
 public:
  constexpr Jet2() = default;
  constexpr explicit Jet2(double value) { c_[0] = value; }

  static constexpr Jet2 constant(double c) { return Jet2(c); }

  static constexpr Jet2 seed_u(double u0) {
    Jet2 j(u0);
    j.c_[index(1, 0)] = 1.0;
    return j;
  }

  static constexpr Jet2 seed_v(double v0) {
    Jet2 j(v0);
    j.c_[index(0, 1)] = 1.0;
    return j;
  }

  /// Position of c[a][b] in the flat storage (ordered by total degree).
  static constexpr std::size_t index(int a, int b) {
    const int d = a + b;
    return static_cast<std::size_t>(d * (d + 1) / 2 + b);
  }

  constexpr double value() const { return c_[0]; }

  /// Taylor coefficient c[a][b]; zero for a + b > 3.
  constexpr double coeff(int a, int b) const {
    if (a < 0 || b < 0 || a + b > kJetDegree) return 0.0;
    return c_[index(a, b)];
  }

  constexpr void set_coeff(int a, int b, double x) {
    if (a < 0 || b < 0 || a + b > kJetDegree) {
      throw GeometryError(ErrorCode::OrderTooHigh, "coefficient slot outside total degree 3");
    }
    c_[index(a, b)] = x;
  }

  constexpr const std::array<double, kJetSize>& coefficients() const { return c_; }

  Jet2& operator+=(const Jet2& o) {
    for (std::size_t i = 0; i < kJetSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    for (std::size_t i = 0; i < kJetSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet2& operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator-(Jet2 a) { return a *= -1.0; }
  friend Jet2 operator*(Jet2 a, double s) { return a *= s; }
  friend Jet2 operator*(double s, Jet2 a) { return a *= s; }
  friend Jet2 operator+(Jet2 a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend Jet2 operator+(double s, Jet2 a) { return a + s; }
  friend Jet2 operator-(Jet2 a, double s) { return a + (-s); }
  friend Jet2 operator-(double s, const Jet2& a) { return (-a) + s; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    for (int a1 = 0; a1 <= kJetDegree; ++a1) {
      for (int b1 = 0; a1 + b1 <= kJetDegree; ++b1) {
        const double x = a.c_[index(a1, b1)];
        if (x == 0.0) continue;
        for (int a2 = 0; a1 + b1 + a2 <= kJetDegree; ++a2) {
          for (int b2 = 0; a1 + b1 + a2 + b2 <= kJetDegree; ++b2) {
            r.c_[index(a1 + a2, b1 + b2)] += x * b.c_[index(a2, b2)];
          }
        }
      }
    }
    return r;
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b);
  friend Jet2 operator/(const Jet2& a, double s) {
    if (!(std::abs(s) > kDenominatorGuard)) {
      throw GeometryError(ErrorCode::DivisionNearZero, "scalar divisor " + std::to_string(s));
    }
    return a * (1.0 / s);
  }

  /// f(a) from the derivatives f(x0), f'(x0), f''(x0), f'''(x0) at x0 = a.value().
  friend Jet2 compose(const Jet2& a, double f0, double f1, double f2, double f3) {
    Jet2 d = a;
    d.c_[0] = 0.0;
    const Jet2 d2 = d * d;
    const Jet2 d3 = d2 * d;
    Jet2 r = f1 * d + (f2 / 2.0) * d2 + (f3 / 6.0) * d3;
    r.c_[0] = f0;
    return r;
  }

 private:
  std::array<double, kJetSize> c_{};
};

inline Jet2 reciprocal(const Jet2& b) {
  const double x = b.value();
  if (!(std::abs(x) > kDenominatorGuard)) {
    throw GeometryError(ErrorCode::DivisionNearZero, "jet divisor value " + std::to_string(x));
  }
  const double r = 1.0 / x;
  return compose(b, r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

inline Jet2 operator/(double s, const Jet2& b) { return s * reciprocal(b); }

inline Jet2 sqrt(const Jet2& a) {
  const double x = a.value();
  if (!(x > kDenominatorGuard)) {
    throw GeometryError(ErrorCode::SqrtDomain, "sqrt of jet value " + std::to_string(x));
  }
  const double s = std::sqrt(x);
  return compose(a, s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x));
}

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  return compose(a, s, c, -s, -c);
}

inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value());
  const double c = std::cos(a.value());
  return compose(a, c, -s, -c, s);
}

inline Jet2 asinh(const Jet2& a) {
  const double x = a.value();
  const double w = 1.0 + x * x;
  const double r = 1.0 / std::sqrt(w);
  return compose(a, std::asinh(x), r, -x * r / w, (2.0 * x * x - 1.0) * r / (w * w));
}

/// |a| for a jet whose value slot is away from zero (the sign is locally constant).
inline Jet2 abs(const Jet2& a) {
  if (!(std::abs(a.value()) > kDenominatorGuard)) {
    throw GeometryError(ErrorCode::DivisionNearZero, "abs of jet near zero");
  }
  return a.value() < 0.0 ? -a : a;
}

/// True mixed partial d^{ord_u + ord_v} f / du^ord_u dv^ord_v.
inline double partial(const Jet2& a, int ord_u, int ord_v) {
  if (ord_u < 0 || ord_v < 0 || ord_u + ord_v > kJetDegree) {
    throw GeometryError(ErrorCode::OrderTooHigh,
                        "partial of order " + std::to_string(ord_u + ord_v) + " requested");
  }
  constexpr double fact[] = {1.0, 1.0, 2.0, 6.0};
  return fact[ord_u] * fact[ord_v] * a.coeff(ord_u, ord_v);
}

inline Jet2 d_du(const Jet2& a) {
  Jet2 r;
  for (int i = 0; i < kJetDegree; ++i) {
    for (int j = 0; i + j < kJetDegree; ++j) r.set_coeff(i, j, (i + 1) * a.coeff(i + 1, j));
  }
  return r;
}

inline Jet2 d_dv(const Jet2& a) {
  Jet2 r;
  for (int i = 0; i < kJetDegree; ++i) {
    for (int j = 0; i + j < kJetDegree; ++j) r.set_coeff(i, j, (j + 1) * a.coeff(i, j + 1));
  }
  return r;
}

}  // namespace rotsurf
