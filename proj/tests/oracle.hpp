#pragma once

// Test-only oracles, independent of the jet pipeline.
//
// Partial derivatives come from tensor-product central differences with one
// Richardson step, evaluated in quad precision so the third-order stencils
// (which divide by h^3) keep their accuracy at h = 1e-4.

#include <quadmath.h>

#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "rotsurf/beltrami.hpp"

namespace oracle {

using quad = __float128;

inline constexpr double kStep = 1e-4;

// Central stencil weights on offsets -2..2 (times h^-k) for derivative order k.
inline const std::array<std::array<double, 5>, 4>& stencils() {
  static const std::array<std::array<double, 5>, 4> w = {{
      {0.0, 0.0, 1.0, 0.0, 0.0},
      {0.0, -0.5, 0.0, 0.5, 0.0},
      {0.0, 1.0, -2.0, 1.0, 0.0},
      {-0.5, 1.0, 0.0, -1.0, 0.5},
  }};
  return w;
}

using QuadFn = std::function<quad(quad, quad)>;

inline quad central(const QuadFn& f, quad u, quad v, int a, int b, quad h) {
  const auto& w = stencils();
  quad acc = 0;
  for (int i = -2; i <= 2; ++i) {
    const double wi = w[a][i + 2];
    if (wi == 0.0) continue;
    for (int j = -2; j <= 2; ++j) {
      const double wj = w[b][j + 2];
      if (wj == 0.0) continue;
      acc += static_cast<quad>(wi * wj) * f(u + i * h, v + j * h);
    }
  }
  quad scale = 1;
  for (int k = 0; k < a + b; ++k) scale *= h;
  return acc / scale;
}

/// d^{a+b} f / du^a dv^b by Richardson-extrapolated central differences.
inline double fd_partial(const QuadFn& f, double u, double v, int a, int b, double h = kStep) {
  const quad qh = h;
  const quad d1 = central(f, u, v, a, b, qh);
  const quad d2 = central(f, u, v, a, b, qh / 2);
  return static_cast<double>((4 * d2 - d1) / 3);
}

// Independent quad-precision transcriptions of the chart functions.
inline quad eta_prime_q(quad u) { return sqrtq(4 * u * u + 1); }
inline quad eta_q(quad u) { return u * sqrtq(4 * u * u + 1) / 2 + asinhq(2 * u) / 4; }

inline QuadFn surface_component_q(int i) {
  switch (i) {
    case 0: return [](quad u, quad v) { return u * u * cosq(v) - u * sinq(v); };
    case 1: return [](quad u, quad v) { return u * u * sinq(v) + u * cosq(v); };
    default: return [](quad u, quad) { return eta_q(u); };
  }
}

/// First derivative of a double-valued function by Richardson central differences.
inline double fd_first(const std::function<double(double)>& f, double x, double h = kStep) {
  const double d1 = (f(x + h) - f(x - h)) / (2 * h);
  const double d2 = (f(x + h / 2) - f(x - h / 2)) / h;
  return (4 * d2 - d1) / 3;
}

/// Third-form operator rebuilt from pointwise P and Q with finite-difference
/// outer derivatives.
inline double lb3_finite_difference(const rotsurf::ParametricSurface& s, const rotsurf::ScalarField& phi, double u,
                                    double v) {
  const auto here = rotsurf::lb3_scalar(s, phi, u, v);
  const double dP =
      fd_first([&](double x) { return rotsurf::lb3_scalar(s, phi, x, v).P; }, u);
  const double dQ =
      fd_first([&](double y) { return rotsurf::lb3_scalar(s, phi, u, y).Q; }, v);
  return -(std::sqrt(std::abs(here.detI)) / here.detII) * (dP - dQ);
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1.0); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261018);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// u uniformly in +-[lo, hi].
inline double signed_uniform(double lo, double hi) {
  const double m = uniform(lo, hi);
  return uniform(0.0, 1.0) < 0.5 ? -m : m;
}

}  // namespace oracle
