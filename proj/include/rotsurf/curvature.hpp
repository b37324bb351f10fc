#pragma once

// Pointwise geometry of a chart: fundamental forms, Gauss map, curvatures and
// the combinations X, Y, Z.  Everything is derived from the degree-3 chart jet;
// no closed form of any particular surface is used here.

#include <cmath>
#include <string>

#include "rotsurf/error.hpp"
#include "rotsurf/jet.hpp"
#include "rotsurf/minkowski.hpp"
#include "rotsurf/surfaces.hpp"

namespace rotsurf {

struct CurvatureOptions {
  /// |det I| must exceed this.
  double metric_guard = 1e-12;
  /// Multiplies H and K; -1 gives the opposite Lorentzian convention.
  int lorentz_sign = +1;
};

template <class S>
struct XYZ {
  S X, Y, Z;
};

/// X = E M^2 - 2F L M + G L^2, Y = E M N - F L N + G L M - F M^2,
/// Z = G M^2 - 2F N M + E N^2.
template <class S>
XYZ<S> xyz_combos(const S& E, const S& F, const S& G, const S& L, const S& M, const S& N) {
  return {E * M * M - 2.0 * F * L * M + G * L * L,
          E * M * N - F * L * N + G * L * M - F * M * M,
          G * M * M - 2.0 * F * N * M + E * N * N};
}

/// Jet-valued form coefficients at a point.  Quantities built from second
/// derivatives of the chart (L, M, N, det II, X, Y, Z) are exact to degree 1,
/// which is what one outer derivative needs.
struct FormJets {
  JVec3 R, Ru, Rv, Ruu, Ruv, Rvv;
  Jet2 E, F, G, detI;
  Jet2 root_abs_detI;
  JVec3 n;
  Jet2 L, M, N, detII;
  Jet2 X, Y, Z;
};

inline JVec3 d_du(const JVec3& p) { return {d_du(p.x1), d_du(p.x2), d_du(p.x3)}; }
inline JVec3 d_dv(const JVec3& p) { return {d_dv(p.x1), d_dv(p.x2), d_dv(p.x3)}; }
inline LVec3 values(const JVec3& p) { return {p.x1.value(), p.x2.value(), p.x3.value()}; }

inline FormJets form_jets(const ParametricSurface& surface, double u, double v,
                          const CurvatureOptions& opts = {}) {
  FormJets f;
  f.R = surface.jet(u, v);
  f.Ru = d_du(f.R);
  f.Rv = d_dv(f.R);
  f.Ruu = d_du(f.Ru);
  f.Ruv = d_dv(f.Ru);
  f.Rvv = d_dv(f.Rv);

  f.E = inner(f.Ru, f.Ru);
  f.F = inner(f.Ru, f.Rv);
  f.G = inner(f.Rv, f.Rv);
  f.detI = f.E * f.G - f.F * f.F;
  if (!(std::abs(f.detI.value()) > opts.metric_guard)) {
    throw GeometryError(ErrorCode::DegenerateMetric,
                        "|det I| = " + std::to_string(std::abs(f.detI.value())) + " at u = " + std::to_string(u));
  }
  f.root_abs_detI = sqrt(abs(f.detI));
  f.n = cross(f.Ru, f.Rv) / f.root_abs_detI;

  f.L = inner(f.Ruu, f.n);
  f.M = inner(f.Ruv, f.n);
  f.N = inner(f.Rvv, f.n);
  f.detII = f.L * f.N - f.M * f.M;

  const auto c = xyz_combos(f.E, f.F, f.G, f.L, f.M, f.N);
  f.X = c.X;
  f.Y = c.Y;
  f.Z = c.Z;
  return f;
}

struct FirstForm {
  double E, F, G, detI;
};

struct SecondForm {
  double L, M, N, detII;
};

struct ThirdForm {
  double e11, e12, e22;
};

struct Curvatures {
  double H, K;
};

struct PointGeometry {
  double u = 0.0, v = 0.0;
  double E = 0.0, F = 0.0, G = 0.0, detI = 0.0;
  LVec3 n;
  double L = 0.0, M = 0.0, N = 0.0, detII = 0.0;
  /// det II rebuilt from b_ij = -<n_i, x_j>; a cross-check of L N - M^2.
  double detII_from_normal = 0.0;
  double e11 = 0.0, e12 = 0.0, e22 = 0.0;
  double H = 0.0, K = 0.0;
  double X = 0.0, Y = 0.0, Z = 0.0;
  /// Causal character of the tangent plane: timelike iff det I < 0.
  CausalCharacter character = CausalCharacter::Spacelike;
};

/// H = (E N - 2 F M + G L) / (2 det I), K = det II / det I, both times
/// the configured sign.
inline Curvatures curvatures_from_forms(const FirstForm& I, const SecondForm& II, int lorentz_sign = +1) {
  const double s = lorentz_sign < 0 ? -1.0 : 1.0;
  return {s * (I.E * II.N - 2.0 * I.F * II.M + I.G * II.L) / (2.0 * I.detI), s * II.detII / I.detI};
}

inline PointGeometry point_geometry(const ParametricSurface& surface, double u, double v,
                                    const CurvatureOptions& opts = {}) {
  const FormJets f = form_jets(surface, u, v, opts);
  PointGeometry g;
  g.u = u;
  g.v = v;
  g.E = f.E.value();
  g.F = f.F.value();
  g.G = f.G.value();
  g.detI = f.detI.value();
  g.n = values(f.n);
  g.L = f.L.value();
  g.M = f.M.value();
  g.N = f.N.value();
  g.detII = f.detII.value();

  const LVec3 nu = values(d_du(f.n));
  const LVec3 nv = values(d_dv(f.n));
  const LVec3 ru = values(f.Ru);
  const LVec3 rv = values(f.Rv);
  g.e11 = inner(nu, nu);
  g.e12 = inner(nu, nv);
  g.e22 = inner(nv, nv);
  g.detII_from_normal = inner(nu, ru) * inner(nv, rv) - inner(nu, rv) * inner(nv, ru);

  const Curvatures c = curvatures_from_forms({g.E, g.F, g.G, g.detI}, {g.L, g.M, g.N, g.detII}, opts.lorentz_sign);
  g.H = c.H;
  g.K = c.K;
  g.X = f.X.value();
  g.Y = f.Y.value();
  g.Z = f.Z.value();
  g.character = g.detI < 0.0 ? CausalCharacter::Timelike
                             : (g.detI > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Lightlike);
  return g;
}

inline FirstForm first_form(const ParametricSurface& surface, double u, double v) {
  const JVec3 R = surface.jet(u, v);
  const LVec3 ru = values(d_du(R));
  const LVec3 rv = values(d_dv(R));
  const double E = inner(ru, ru);
  const double F = inner(ru, rv);
  const double G = inner(rv, rv);
  return {E, F, G, E * G - F * F};
}

inline LVec3 gauss_map(const ParametricSurface& surface, double u, double v, const CurvatureOptions& opts = {}) {
  return point_geometry(surface, u, v, opts).n;
}

inline SecondForm second_form(const ParametricSurface& surface, double u, double v,
                              const CurvatureOptions& opts = {}) {
  const PointGeometry g = point_geometry(surface, u, v, opts);
  return {g.L, g.M, g.N, g.detII};
}

inline ThirdForm third_form(const ParametricSurface& surface, double u, double v,
                            const CurvatureOptions& opts = {}) {
  const PointGeometry g = point_geometry(surface, u, v, opts);
  return {g.e11, g.e12, g.e22};
}

inline Curvatures invariants(const ParametricSurface& surface, double u, double v,
                             const CurvatureOptions& opts = {}) {
  const PointGeometry g = point_geometry(surface, u, v, opts);
  return {g.H, g.K};
}

}  // namespace rotsurf
