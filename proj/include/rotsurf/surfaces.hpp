#pragma once

// Charts of rotational surfaces about the timelike axis (0,0,1).  Every
// chart is evaluable on doubles (meshing) and on jets (geometry).

#include <cmath>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>

#include "rotsurf/error.hpp"
#include "rotsurf/jet.hpp"
#include "rotsurf/minkowski.hpp"

namespace rotsurf {

using JVec3 = Vec3<Jet2>;

/// Half-width of the band |u| < u_exclude removed from the domain; the metric
/// degenerates (det I = -u^4) at u = 0.
inline constexpr double kDefaultUExclude = 1e-3;

/// Height of the lightlike profile: the antiderivative of sqrt(4u^2 + 1)
/// with the integration constant fixed to 0.
template <class S>
S eta(const S& u) {
  using std::asinh;
  using std::sqrt;
  return 0.5 * u * sqrt(4.0 * u * u + 1.0) + 0.25 * asinh(2.0 * u);
}

template <class S>
S eta_prime(const S& u) {
  using std::sqrt;
  return sqrt(4.0 * u * u + 1.0);
}

/// gamma(u) = (u^2, u, eta(u)); gamma'(u) = (2u, 1, sqrt(4u^2+1)) is null.
template <class S>
Vec3<S> profile_gamma(const S& u) {
  return {u * u, u, eta(u)};
}

struct ProfileCurve {
  std::string name;
  CausalCharacter intended = CausalCharacter::Lightlike;
  std::function<LVec3(double)> point;
  std::function<JVec3(const Jet2&)> jet;
};

inline ProfileCurve lightlike_profile() {
  return {"lightlike (u^2, u, eta(u))", CausalCharacter::Lightlike,
          [](double u) { return profile_gamma(u); },
          [](const Jet2& u) { return profile_gamma(u); }};
}

/// gamma at u with the excluded band enforced.
inline LVec3 profile_gamma_checked(double u, double u_exclude = kDefaultUExclude) {
  if (std::abs(u) < u_exclude) {
    throw GeometryError(ErrorCode::DomainExcluded, "u = " + std::to_string(u) + " lies in the excluded band");
  }
  return profile_gamma(u);
}

class ParametricSurface {
 public:
  using PointFn = std::function<LVec3(double, double)>;
  using JetFn = std::function<JVec3(const Jet2&, const Jet2&)>;

  ParametricSurface(std::string name, PointFn point, JetFn jet, double u_exclude = kDefaultUExclude)
      : name_(std::move(name)), point_(std::move(point)), jet_(std::move(jet)), u_exclude_(u_exclude) {}

  const std::string& name() const { return name_; }
  double u_exclude() const { return u_exclude_; }

  ParametricSurface with_u_exclude(double u_exclude) const {
    ParametricSurface s = *this;
    s.u_exclude_ = u_exclude;
    return s;
  }

  /// Excluded-band membership only; v is unrestricted.
  bool admissible(double u, double /*v*/) const { return !(std::abs(u) < u_exclude_); }

  LVec3 point(double u, double v) const { return point_(u, v); }

  /// Chart jet seeded at (u, v); fails inside the excluded band.
  JVec3 jet(double u, double v) const {
    if (!admissible(u, v)) {
      throw GeometryError(ErrorCode::DomainExcluded, "u = " + std::to_string(u) + " lies in the excluded band");
    }
    return jet_(Jet2::seed_u(u), Jet2::seed_v(v));
  }

  JVec3 jet(const Jet2& u, const Jet2& v) const { return jet_(u, v); }

 private:
  std::string name_;
  PointFn point_;
  JetFn jet_;
  double u_exclude_;
};

/// Wraps a generic callable f(u, v) -> Vec3<S> usable with S = double and S = Jet2.
template <class F>
ParametricSurface make_surface(std::string name, F f, double u_exclude = kDefaultUExclude) {
  return ParametricSurface(
      std::move(name), [f](double u, double v) { return f(u, v); },
      [f](const Jet2& u, const Jet2& v) { return f(u, v); }, u_exclude);
}

/// R(u, v) = T(v) gamma(u).
inline ParametricSurface make_rotational(const ProfileCurve& profile, double u_exclude = kDefaultUExclude) {
  return ParametricSurface(
      "rotation of " + profile.name,
      [point = profile.point](double u, double v) { return rotation_timelike(v) * point(u); },
      [jet = profile.jet](const Jet2& u, const Jet2& v) { return rotation_timelike(v) * jet(u); },
      u_exclude);
}

/// The (T,L)-type surface in closed form:
/// (u^2 cos v - u sin v, u^2 sin v + u cos v, eta(u)).
inline ParametricSurface tl_surface(double u_exclude = kDefaultUExclude) {
  return make_surface(
      "(T,L)-type rotational surface",
      [](const auto& u, const auto& v) {
        using std::cos;
        using std::sin;
        using S = std::decay_t<decltype(u)>;
        const S c = cos(v);
        const S s = sin(v);
        return Vec3<S>{u * u * c - u * s, u * u * s + u * c, eta(u)};
      },
      u_exclude);
}

}  // namespace rotsurf
