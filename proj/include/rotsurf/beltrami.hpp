#pragma once

// Laplace-Beltrami operators on a chart.
//
// The third-form operator uses the divergence expression
//
//   D3 phi = -(sqrt|det I| / det II) * [ d/du P - d/dv Q ],
//   P = (Z phi_u - Y phi_v) / (sqrt|det I| det II),
//   Q = (Y phi_u - X phi_v) / (sqrt|det I| det II),
//
// with P and Q carried as jets so the outer derivatives are exact.

#include <cmath>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>

#include "rotsurf/curvature.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/jet.hpp"
#include "rotsurf/minkowski.hpp"
#include "rotsurf/surfaces.hpp"

namespace rotsurf {

struct BeltramiOptions {
  double metric_guard = 1e-12;
  /// |det II| must exceed this; the operator is undefined at parabolic points.
  double parabolic_guard = 1e-12;
};

class ScalarField {
 public:
  using PointFn = std::function<double(double, double)>;
  using JetFn = std::function<Jet2(const Jet2&, const Jet2&)>;

  ScalarField(PointFn point, JetFn jet) : point_(std::move(point)), jet_(std::move(jet)) {}

  double operator()(double u, double v) const { return point_(u, v); }
  Jet2 jet(const Jet2& u, const Jet2& v) const { return jet_(u, v); }

  /// Component i of a surface chart.
  static ScalarField component(const ParametricSurface& s, int i) {
    return ScalarField([s, i](double u, double v) { return s.point(u, v)[static_cast<std::size_t>(i)]; },
                       [s, i](const Jet2& u, const Jet2& v) { return s.jet(u, v)[static_cast<std::size_t>(i)]; });
  }

  static ScalarField constant(double c) {
    return ScalarField([c](double, double) { return c; }, [c](const Jet2&, const Jet2&) { return Jet2(c); });
  }

  /// a*f + b*g
  static ScalarField combine(double a, const ScalarField& f, double b, const ScalarField& g) {
    return ScalarField([=](double u, double v) { return a * f(u, v) + b * g(u, v); },
                       [=](const Jet2& u, const Jet2& v) { return a * f.jet(u, v) + b * g.jet(u, v); });
  }

 private:
  PointFn point_;
  JetFn jet_;
};

/// Wraps a generic callable f(u, v) -> S usable with S = double and S = Jet2.
template <class F>
ScalarField make_field(F f) {
  return ScalarField([f](double u, double v) { return f(u, v); },
                     [f](const Jet2& u, const Jet2& v) { return f(u, v); });
}

struct BeltramiResult {
  double value = 0.0;
  double detI = 0.0, detII = 0.0;
  double X = 0.0, Y = 0.0, Z = 0.0;
  double P = 0.0, Q = 0.0;
};

namespace detail {

inline void require_non_parabolic(const FormJets& f, double guard) {
  if (!(std::abs(f.detII.value()) > guard)) {
    throw GeometryError(ErrorCode::ParabolicPoint, "|det II| = " + std::to_string(std::abs(f.detII.value())));
  }
}

inline BeltramiResult lb3_from_jets(const FormJets& f, const Jet2& phi) {
  const Jet2 phi_u = d_du(phi);
  const Jet2 phi_v = d_dv(phi);
  const Jet2 denom = f.root_abs_detI * f.detII;
  const Jet2 P = (f.Z * phi_u - f.Y * phi_v) / denom;
  const Jet2 Q = (f.Y * phi_u - f.X * phi_v) / denom;

  BeltramiResult r;
  r.detI = f.detI.value();
  r.detII = f.detII.value();
  r.X = f.X.value();
  r.Y = f.Y.value();
  r.Z = f.Z.value();
  r.P = P.value();
  r.Q = Q.value();
  r.value = -(f.root_abs_detI.value() / r.detII) * (partial(P, 1, 0) - partial(Q, 0, 1));
  return r;
}

inline double lb1_from_jets(const FormJets& f, const Jet2& phi) {
  const Jet2 phi_u = d_du(phi);
  const Jet2 phi_v = d_dv(phi);
  const Jet2 A = (f.G * phi_u - f.F * phi_v) / f.root_abs_detI;
  const Jet2 B = (f.E * phi_v - f.F * phi_u) / f.root_abs_detI;
  return (partial(A, 1, 0) + partial(B, 0, 1)) / f.root_abs_detI.value();
}

}  // namespace detail

inline BeltramiResult lb3_scalar(const ParametricSurface& surface, const ScalarField& field, double u, double v,
                                 const BeltramiOptions& opts = {}) {
  const FormJets f = form_jets(surface, u, v, {opts.metric_guard, +1});
  detail::require_non_parabolic(f, opts.parabolic_guard);
  return detail::lb3_from_jets(f, field.jet(Jet2::seed_u(u), Jet2::seed_v(v)));
}

/// Third-form operator applied to each coordinate of the chart.
inline LVec3 lb3_position(const ParametricSurface& surface, double u, double v, const BeltramiOptions& opts = {}) {
  const FormJets f = form_jets(surface, u, v, {opts.metric_guard, +1});
  detail::require_non_parabolic(f, opts.parabolic_guard);
  return {detail::lb3_from_jets(f, f.R.x1).value, detail::lb3_from_jets(f, f.R.x2).value,
          detail::lb3_from_jets(f, f.R.x3).value};
}

/// First-form operator
/// (1/sqrt|g|) ( d/du[(G phi_u - F phi_v)/sqrt|g|] + d/dv[(E phi_v - F phi_u)/sqrt|g|] ).
inline double lb1_scalar(const ParametricSurface& surface, const ScalarField& field, double u, double v,
                         const BeltramiOptions& opts = {}) {
  const FormJets f = form_jets(surface, u, v, {opts.metric_guard, +1});
  return detail::lb1_from_jets(f, field.jet(Jet2::seed_u(u), Jet2::seed_v(v)));
}

inline LVec3 lb1_position(const ParametricSurface& surface, double u, double v, const BeltramiOptions& opts = {}) {
  const FormJets f = form_jets(surface, u, v, {opts.metric_guard, +1});
  return {detail::lb1_from_jets(f, f.R.x1), detail::lb1_from_jets(f, f.R.x2), detail::lb1_from_jets(f, f.R.x3)};
}

}  // namespace rotsurf
