#pragma once

// Vector algebra of Lorentz-Minkowski 3-space L^3: R^3 with the inner
// product <p,q> = p1 q1 + p2 q2 - p3 q3.  Everything is templated on the
// scalar so the same code runs on doubles and on Taylor jets.

#include <array>
#include <cmath>
#include <algorithm>
#include <cstddef>
#include <utility>

namespace rotsurf {

template <class T>
struct Vec3 {
  T x1{}, x2{}, x3{};

  constexpr Vec3() = default;
  constexpr Vec3(T a, T b, T c) : x1(std::move(a)), x2(std::move(b)), x3(std::move(c)) {}

  constexpr const T& operator[](std::size_t i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  constexpr T& operator[](std::size_t i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend Vec3 operator*(const T& s, const Vec3& a) { return {s * a.x1, s * a.x2, s * a.x3}; }
  friend Vec3 operator*(const Vec3& a, const T& s) { return s * a; }
  friend Vec3 operator/(const Vec3& a, const T& s) { return {a.x1 / s, a.x2 / s, a.x3 / s}; }
};

using LVec3 = Vec3<double>;

template <class T>
T inner(const Vec3<T>& p, const Vec3<T>& q) {
  return p.x1 * q.x1 + p.x2 * q.x2 - p.x3 * q.x3;
}

/// Lorentzian vector product, component order
/// (p2 q3 - q2 p3, q1 p3 - p1 q3, q1 p2 - p1 q2).
template <class T>
Vec3<T> cross(const Vec3<T>& p, const Vec3<T>& q) {
  return {p.x2 * q.x3 - q.x2 * p.x3, q.x1 * p.x3 - p.x1 * q.x3, q.x1 * p.x2 - p.x1 * q.x2};
}

inline double norm(const LVec3& p) { return std::sqrt(std::abs(inner(p, p))); }

inline double euclidean_norm_sq(const LVec3& p) { return p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3; }

inline double euclidean_norm(const LVec3& p) { return std::sqrt(euclidean_norm_sq(p)); }

inline bool is_finite(const LVec3& p) {
  return std::isfinite(p.x1) && std::isfinite(p.x2) && std::isfinite(p.x3);
}

inline double max_abs(const LVec3& p) {
  return std::max({std::abs(p.x1), std::abs(p.x2), std::abs(p.x3)});
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

constexpr const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "unknown";
}

inline constexpr double kCausalTolerance = 1e-12;

/// The zero vector is spacelike.  Otherwise <p,p> is compared against the
/// band tol * (1 + |p|_E^2).
inline CausalCharacter causal_character(const LVec3& p, double tol = kCausalTolerance) {
  if (p.x1 == 0.0 && p.x2 == 0.0 && p.x3 == 0.0) return CausalCharacter::Spacelike;
  const double q = inner(p, p);
  const double band = tol * (1.0 + euclidean_norm_sq(p));
  if (std::abs(q) <= band) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

template <class T>
struct Mat3 {
  std::array<std::array<T, 3>, 3> a{};

  constexpr const T& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }
  constexpr T& operator()(std::size_t i, std::size_t j) { return a[i][j]; }

  static Mat3 identity() {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m.a[i][j] = T(i == j ? 1.0 : 0.0);
    }
    return m;
  }

  static Mat3 diagonal(T d0, T d1, T d2) {
    Mat3 m = identity();
    m.a[0][0] = d0;
    m.a[1][1] = d1;
    m.a[2][2] = d2;
    return m;
  }

  Mat3 transposed() const {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m.a[i][j] = a[j][i];
    }
    return m;
  }

  T det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        T s = x.a[i][0] * y.a[0][j];
        s = s + x.a[i][1] * y.a[1][j];
        s = s + x.a[i][2] * y.a[2][j];
        m.a[i][j] = s;
      }
    }
    return m;
  }

  friend Mat3 operator*(const T& s, const Mat3& x) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m.a[i][j] = s * x.a[i][j];
    }
    return m;
  }

  template <class V>
  friend Vec3<V> operator*(const Mat3& x, const Vec3<V>& p) {
    return {x.a[0][0] * p.x1 + x.a[0][1] * p.x2 + x.a[0][2] * p.x3,
            x.a[1][0] * p.x1 + x.a[1][1] * p.x2 + x.a[1][2] * p.x3,
            x.a[2][0] * p.x1 + x.a[2][1] * p.x2 + x.a[2][2] * p.x3};
  }
};

using LMat3 = Mat3<double>;

/// epsilon = diag(1, 1, -1), the Gram matrix of the Lorentzian product.
inline LMat3 lorentz_metric() { return LMat3::diagonal(1.0, 1.0, -1.0); }

/// Rotation about the timelike axis (0,0,1) by angle v.  Works for any
/// scalar with sin/cos found by ADL (double, Jet2).
template <class T>
Mat3<T> rotation_timelike(const T& v) {
  using std::cos;
  using std::sin;
  const T c = cos(v);
  const T s = sin(v);
  Mat3<T> m;
  m.a = {{{c, -s, T(0.0)}, {s, c, T(0.0)}, {T(0.0), T(0.0), T(1.0)}}};
  return m;
}

/// Checks M^t eps M = eps, det M = 1 and M (0,0,1) = (0,0,1) to tol (max norm).
inline bool is_lorentz_rotation(const LMat3& m, double tol) {
  const LMat3 eps = lorentz_metric();
  const LMat3 g = m.transposed() * eps * m;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!(std::abs(g(i, j) - eps(i, j)) <= tol)) return false;
    }
  }
  if (!(std::abs(m.det() - 1.0) <= tol)) return false;
  const LVec3 axis{0.0, 0.0, 1.0};
  return max_abs(m * axis - axis) <= tol;
}

}  // namespace rotsurf
