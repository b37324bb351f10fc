#pragma once

// Closed-form expressions for the (T,L)-type surface exactly as printed,
// including the ones the pipeline disagrees with.  Nothing in this file is
// used to compute geometry; these are the subjects of the audit.
//
// Notation inside: ep = eta'(u) = sqrt(4u^2 + 1), sk = sin(k v), ck = cos(k v),
// and sqrt|det I| = u^2 from the printed det I = -u^4.

#include <cmath>
#include <string>
#include <utility>

#include "rotsurf/error.hpp"
#include "rotsurf/minkowski.hpp"
#include "rotsurf/surfaces.hpp"

namespace rotsurf::transcribed {

inline constexpr double kSingularGuard = 1e-12;

namespace detail {

inline double p(double u, int k) { return std::pow(u, k); }

inline double guarded(double denom, const char* what) {
  if (!(std::abs(denom) > kSingularGuard)) {
    throw GeometryError(ErrorCode::SingularDenominator, std::string(what) + " vanishes");
  }
  return denom;
}

/// The printed sqrt|det I| = u^2.
inline double root_abs_det_i(double u) { return guarded(u * u, "sqrt|det I|"); }

struct Trig {
  explicit Trig(double v) : v_(v) {}
  double s(int k) const { return std::sin(k * v_); }
  double c(int k) const { return std::cos(k * v_); }

 private:
  double v_;
};

}  // namespace detail

inline double eta_prime(double u) { return std::sqrt(4.0 * u * u + 1.0); }

/// Eq. of the surface: (u^2 cos v - u sin v, u^2 sin v + u cos v, u sqrt(4u^2+1)/2 + asinh(2u)/4).
inline LVec3 surface(double u, double v) {
  return {u * u * std::cos(v) - u * std::sin(v), u * u * std::sin(v) + u * std::cos(v),
          0.5 * u * std::sqrt(4.0 * u * u + 1.0) + 0.25 * std::asinh(2.0 * u)};
}

/// Printed Gauss map, third component -2u^3 + u as printed.
inline LVec3 gauss_map(double u, double v) {
  const double ep = eta_prime(u);
  const double r = detail::root_abs_det_i(u);
  return {-u * (std::sin(v) + u * std::cos(v)) * ep / r, -u * (std::cos(v) + u * std::sin(v)) * ep / r,
          (-2.0 * u * u * u + u) / r};
}

/// (E, F, G) = (0, -u^2, u^4 + u^2).
inline LVec3 first_form(double u, double /*v*/) { return {0.0, -u * u, u * u * u * u + u * u}; }

inline double second_L(double u, double v) {
  const detail::Trig t(v);
  return (-2.0 * u * t.s(2) - 2.0 * u * u) / detail::root_abs_det_i(u) * eta_prime(u);
}

inline double second_M(double u, double v) {
  const detail::Trig t(v);
  return (u * t.s(2) - 2.0 * u * u * t.c(2) + u * u) / detail::root_abs_det_i(u) * eta_prime(u);
}

inline double second_N(double u, double v) {
  const detail::Trig t(v);
  return (u * t.s(2) + u * u * t.c(2) + detail::p(u, 4)) / detail::root_abs_det_i(u) * eta_prime(u);
}

/// det II = (ep^2/u^2)[(-2u^3-4u)s2 + 2u^2 c2 + u s4 + (-2u^2+3/2)c4 - 2u^4 - 3u^2 - 3/2].
inline double det_ii(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  const double bracket = (-2.0 * p(u, 3) - 4.0 * u) * t.s(2) + 2.0 * u * u * t.c(2) + u * t.s(4) +
                         (-2.0 * u * u + 1.5) * t.c(4) - 2.0 * p(u, 4) - 3.0 * u * u - 1.5;
  return ep * ep / detail::guarded(u * u, "u^2") * bracket;
}

inline double third_X(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  return 2.0 * u * ep * ep *
         (4.0 * u * u * t.s(2) + 4.0 * u * t.c(2) + 2.0 * t.s(4) - u * t.c(4) + 2.0 * p(u, 3) + u);
}

/// The printed Y has no operator between its first and second lines; "+" is
/// the reading used here.
inline double third_Y(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  return 0.5 * ep * ep *
         (-(12.0 * p(u, 3) + 8.0 * u) * t.s(2) + (8.0 * p(u, 4) - 4.0 * u * u) * t.c(2) +
          (4.0 * p(u, 3) - 2.0 * u) * t.s(4) + (6.0 * u * u + 3.0) * t.c(4) - 8.0 * p(u, 4) - 3.0);
}

inline double third_Z(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  return -0.5 * ep * ep *
         (-(8.0 * p(u, 3) + 8.0 * u) * t.s(2) + (16.0 * p(u, 4) + 4.0 * u * u) * t.c(2) +
          (4.0 * p(u, 3) + 6.0 * u) * t.s(4) + (-4.0 * p(u, 4) + u * u + 3.0) * t.c(4) - 10.0 * p(u, 4) -
          3.0 * u * u - 3.0);
}

/// Phi: ep^2 times the product of two printed brackets.
inline double phi(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  const double first = u * t.s(4) - (2.0 * p(u, 3) + 4.0 * u) * t.s(2) + (-4.0 * u * u + 3.0) * t.c(2) * t.c(2) +
                       2.0 * u * u * t.c(2) - 2.0 * p(u, 4) - u * u - 3.0;
  const double second = (64.0 * p(u, 7) + 192.0 * p(u, 5) + 176.0 * p(u, 3) + 144.0 * u) * t.s(2) +
                        (64.0 * p(u, 8) - 144.0 * p(u, 6) - 56.0 * u * u) * t.c(2) -
                        (64.0 * p(u, 5) + 112.0 * p(u, 3) + 24.0 * u) * t.s(4) +
                        (48.0 * p(u, 6) - 88.0 * u * u - 36.0) * t.c(4) +
                        (32.0 * p(u, 5) - 56.0 * p(u, 3) - 48.0 * u) * t.s(6) +
                        (-16.0 * p(u, 4) + 56.0 * u * u) * t.c(6) + (-16.0 * p(u, 3) + 12.0 * u) * t.s(8) +
                        (16.0 * p(u, 4) - 28.0 * u * u + 9.0) * t.c(8) + 32.0 * p(u, 8) + 112.0 * p(u, 6) +
                        216.0 * p(u, 4) + 116.0 * u * u + 27.0;
  return ep * ep * first * second;
}

inline double theta(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  const double bracket =
      3.0 / 32.0 * u *
          (32.0 * p(u, 10) + 136.0 * p(u, 8) + 312.0 * p(u, 6) - 424.0 * p(u, 4) - 249.0 * u * u - 90.0) * t.s(2) +
      1.0 / 32.0 * u * u * (32.0 * p(u, 8) + 152.0 * p(u, 6) + 256.0 * p(u, 4) + 132.0 * u * u + 33.0) * t.c(2) -
      3.0 / 64.0 * u * (192.0 * p(u, 8) + 672.0 * p(u, 6) + 896.0 * p(u, 4) + 444.0 * u * u + 45.0) * t.s(4) +
      3.0 / 16.0 * (8.0 * p(u, 10) + 8.0 * p(u, 8) - 12.0 * p(u, 6) - 81.0 * p(u, 4) - 60.0) * t.c(4) +
      1.0 / 64.0 * u * (176.0 * p(u, 8) + 528.0 * p(u, 6) + 300.0 * p(u, 4) - 203.0 * u * u - 270.0) * t.s(6) -
      1.0 / 64.0 * u * u * (48.0 * p(u, 6) - 272.0 * p(u, 4) - 648.0 * u * u - 297.0) * t.c(6) -
      3.0 / 32.0 * u * (28.0 * p(u, 6) + 20.0 * p(u, 4) - 46.0 * u * u - 9.0) * t.s(8) +
      3.0 / 128.0 * (32.0 * p(u, 8) - 120.0 * p(u, 6) - 204.0 * p(u, 4) + 66.0 * u * u + 27.0) * t.c(8) +
      3.0 / 64.0 * u * (16.0 * p(u, 6) + 20.0 * p(u, 4) - 59.0 * u * u + 18.0) * t.s(10) +
      9.0 / 64.0 * u * u * (16.0 * u * u + 11.0) * t.c(10) -
      1.0 / 64.0 * u * (48.0 * p(u, 4) - 76.0 * u * u + 27.0) * t.s(12) +
      1.0 / 256.0 * (64.0 * p(u, 6) - 192.0 * p(u, 4) + 144.0 * u * u - 27.0) * t.c(12) +
      1.0 / 128.0 *
          (128.0 * p(u, 12) + 768.0 * p(u, 10) + 2496.0 * p(u, 8) + 3576.0 * p(u, 6) + 2652.0 * p(u, 4) +
           1170.0 * u * u + 135.0);
  return ep * ep * bracket;
}

/// Bracket multiplying -u^4/Phi in the first component of the operator.
inline double delta3_r1_bracket(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  return (224.0 * p(u, 9) + 760.0 * p(u, 7) + 468.0 * p(u, 5) + 4.0 * p(u, 3) + 6.0 * u) * t.s(1) +
         (64.0 * p(u, 10) + 80.0 * p(u, 8) + 100.0 * p(u, 6) - 94.0 * p(u, 4) + 188.0 * u * u) * t.c(1) +
         (-96.0 * p(u, 9) - 696.0 * p(u, 7) - 220.0 * p(u, 5) + 148.0 * p(u, 3) + 120.0 * u) * t.s(3) +
         (160.0 * p(u, 8) - 572.0 * p(u, 6) - 710.0 * p(u, 4) + 160.0 * u * u - 12.0) * t.c(3) +
         (344.0 * p(u, 7) - 188.0 * p(u, 5) - 556.0 * p(u, 3) + 48.0 * u) * t.s(5) +
         (16.0 * p(u, 8) - 452.0 * p(u, 6) - 214.0 * p(u, 4) - 432.0 * u * u + 12.0) * t.c(5) +
         (-56.0 * p(u, 7) + 48.0 * p(u, 5) - 4.0 * p(u, 3) - 75.0 * u) * t.s(7) +
         (-44.0 * p(u, 6) + 64.0 * p(u, 4) + 90.0 * u * u + 6.0) * t.c(7) +
         (12.0 * p(u, 5) - 8.0 * p(u, 3) - 9.0 * u) * t.s(9) +
         (-16.0 * p(u, 6) + 18.0 * p(u, 4) - 6.0 * u * u - 6.0) * t.c(9);
}

/// Bracket multiplying -2u^4/Phi in the second component.  The printed
/// bracket is never closed; it is read as ending after the cos(9v) term.
inline double delta3_r2_bracket(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  return (64.0 * p(u, 10) - 272.0 * p(u, 8) - 1540.0 * p(u, 6) - 182.0 * p(u, 4) - 264.0 * u * u) * t.s(1) +
         (160.0 * p(u, 9) - 8.0 * p(u, 7) - 876.0 * p(u, 5) - 332.0 * p(u, 3) - 6.0 * u) * t.c(1) +
         (-128.0 * p(u, 8) + 692.0 * p(u, 6) - 318.0 * p(u, 4) + 692.0 * u * u + 12.0) * t.s(3) +
         (96.0 * p(u, 9) - 232.0 * p(u, 7) + 1148.0 * p(u, 5) - 164.0 * p(u, 3) + 120.0 * u) * t.c(3) +
         (16.0 * p(u, 8) - 564.0 * p(u, 6) - 338.0 * p(u, 4) + 60.0 * u * u + 12.0) * t.s(5) +
         (120.0 * p(u, 7) - 572.0 * p(u, 5) + 196.0 * p(u, 3) - 48.0 * u) * t.c(5) +
         (148.0 * p(u, 6) - 148.0 * p(u, 4) - 46.0 * u * u - 6.0) * t.s(7) +
         (56.0 * p(u, 7) + 168.0 * p(u, 5) - 28.0 * p(u, 3) - 75.0 * u) * t.c(7) +
         (-16.0 * p(u, 6) + 18.0 * p(u, 4) - 6.0 * u * u - 6.0) * t.s(9) +
         (12.0 * p(u, 5) + 8.0 * p(u, 3) + 9.0 * u) * t.c(9);
}

/// The braced numerator {A ep^2 + B ep} of the third component.
inline double delta3_r3_braced(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  const double a =
      1.0 / 16.0 * u * (32.0 * p(u, 6) + 83.0 * p(u, 4) + 65.0 * u * u + 36.0) * t.s(2) -
      1.0 / 16.0 * u * u * (32.0 * p(u, 6) + 100.0 * p(u, 4) + 51.0 * u * u + 22.0) * t.c(2) -
      1.0 / 16.0 * u * (24.0 * p(u, 6) + 78.0 * p(u, 4) + 43.0 * u * u + 12.0) * t.s(4) +
      1.0 / 16.0 * (38.0 * p(u, 6) - 32.0 * p(u, 4) - 25.0 * u * u + 8.0 * p(u, 8) - 9.0) * t.c(4) +
      1.0 / 16.0 * u * (4.0 * p(u, 6) + 27.0 * p(u, 4) + 5.0 * u * u - 12.0) * t.s(6) -
      1.0 / 16.0 * u * u * (16.0 * p(u, 4) - 27.0 * u * u - 22.0) * t.c(6) -
      1.0 / 32.0 * u * (12.0 * p(u, 4) + 5.0 * u * u - 12.0) * t.s(8) +
      1.0 / 64.0 * (16.0 * p(u, 6) - 24.0 * p(u, 4) - 21.0 * u * u + 9.0) * t.c(8) +
      1.0 / 64.0 * (80.0 * p(u, 8) + 256.0 * p(u, 6) + 224.0 * p(u, 4) + 121.0 * u * u + 27.0);
  const double b = 1.0 / 16.0 * u * u * (32.0 * p(u, 6) - 24.0 * p(u, 4) + 109.0 * u * u - 87.0) * t.s(2) +
                   1.0 / 4.0 * p(u, 3) * (4.0 * p(u, 4) - 3.0 * u * u + 24.0) * t.c(2) +
                   1.0 / 16.0 * (104.0 * p(u, 6) - 58.0 * p(u, 4) + 93.0 * u * u - 6.0) * t.s(4) -
                   1.0 / 8.0 * u * (16.0 * p(u, 6) - 50.0 * p(u, 4) + 14.0 * u * u - 9.0) * t.c(4) -
                   1.0 / 16.0 * u * u * (20.0 * p(u, 4) - 69.0 * u * u + 19.0) * t.s(6) -
                   1.0 / 4.0 * p(u, 3) * (19.0 * u * u - 8.0) * t.c(6) -
                   1.0 / 32.0 * (20.0 * p(u, 4) - 31.0 * u * u - 6.0) * t.s(8) +
                   1.0 / 32.0 * u * (16.0 * p(u, 4) - 32.0 * u * u + 15.0) * t.c(8) +
                   1.0 / 32.0 * u * (64.0 * p(u, 6) + 112.0 * p(u, 4) - 8.0 * u * u - 51.0);
  return a * ep * ep + b * ep;
}

inline LVec3 delta3(double u, double v) {
  const double u4 = detail::p(u, 4);
  const double ph = detail::guarded(phi(u, v), "Phi");
  const double th = detail::guarded(theta(u, v), "Theta");
  return {-u4 / ph * delta3_r1_bracket(u, v), -2.0 * u4 / ph * delta3_r2_bracket(u, v),
          -u4 / th * delta3_r3_braced(u, v)};
}

/// H = -(ep/u^4)(u^3 s2 + 2u^2 c2 + u^4).
inline double mean_curvature(double u, double v) {
  const detail::Trig t(v);
  return -eta_prime(u) / detail::guarded(detail::p(u, 4), "u^4") *
         (detail::p(u, 3) * t.s(2) + 2.0 * u * u * t.c(2) + detail::p(u, 4));
}

inline double gaussian_curvature(double u, double v) {
  using detail::p;
  const detail::Trig t(v);
  const double ep = eta_prime(u);
  const double bracket = -(2.0 * p(u, 3) + 4.0 * u) * t.s(2) + 2.0 * u * u * t.c(2) + u * t.s(4) +
                         (-2.0 * u * u + 1.5) * t.c(4) - 2.0 * p(u, 4) - 3.0 * u * u - 1.5;
  return ep * ep / detail::guarded(p(u, 6), "u^6") * bracket;
}

/// Numerator u^3 sin 2v + 2u^2 cos 2v + u^4 whose zeros are the minimal points.
inline double mean_curvature_numerator(double u, double v) {
  return detail::p(u, 3) * std::sin(2.0 * v) + 2.0 * u * u * std::cos(2.0 * v) + detail::p(u, 4);
}

/// Printed real roots u3,4 = -+sqrt(2 cos 2v + sin(2v)/4) - sin(2v)/2, in
/// that order.  A negative radicand is a domain failure.
inline std::pair<double, double> printed_real_roots(double v) {
  const double radicand = 2.0 * std::cos(2.0 * v) + 0.25 * std::sin(2.0 * v);
  if (radicand < 0.0) {
    throw GeometryError(ErrorCode::NegativeRadicand, "printed root radicand " + std::to_string(radicand));
  }
  const double r = std::sqrt(radicand);
  const double shift = -0.5 * std::sin(2.0 * v);
  return {-r + shift, r + shift};
}

}  // namespace rotsurf::transcribed
