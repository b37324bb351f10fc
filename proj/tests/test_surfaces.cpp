#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "rotsurf/surfaces.hpp"

using namespace rotsurf;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_vec_near(const LVec3& a, const LVec3& b, double tol) {
  EXPECT_NEAR(a.x1, b.x1, tol);
  EXPECT_NEAR(a.x2, b.x2, tol);
  EXPECT_NEAR(a.x3, b.x3, tol);
}

}  // namespace

TEST(Profile, Eta) {
  EXPECT_EQ(eta(0.0), 0.0);
  EXPECT_NEAR(eta(1.0), 1.4789429, 1e-7);
  EXPECT_NEAR(eta(-1.0), -1.4789429, 1e-7);
  EXPECT_NEAR(eta(2.0), std::sqrt(17.0) + std::asinh(4.0) / 4, 1e-15);
}

TEST(Profile, GammaAndNullTangent) {
  expect_vec_near(profile_gamma(1.0), {1, 1, 1.4789429}, 1e-7);
  expect_vec_near(profile_gamma(-1.0), {1, -1, -1.4789429}, 1e-7);
  const JVec3 g = profile_gamma(Jet2::seed_u(0.5));
  const LVec3 d{partial(g.x1, 1, 0), partial(g.x2, 1, 0), partial(g.x3, 1, 0)};
  EXPECT_LE(std::abs(inner(d, d)), 1e-12);
}

TEST(Profile, LightlikeAcrossRange) {
  const ProfileCurve p = lightlike_profile();
  EXPECT_EQ(p.intended, CausalCharacter::Lightlike);
  for (int k = 0; k < 500; ++k) {
    const double u = oracle::signed_uniform(0.05, 5.0);
    const JVec3 g = p.jet(Jet2::seed_u(u));
    const LVec3 d{partial(g.x1, 1, 0), partial(g.x2, 1, 0), partial(g.x3, 1, 0)};
    EXPECT_LE(std::abs(inner(d, d)) / (1 + 4 * u * u), 1e-12);
  }
}

TEST(Profile, ExcludedBand) {
  EXPECT_NO_THROW(profile_gamma_checked(0.5));
  try {
    (void)profile_gamma_checked(1e-4);
    FAIL() << "expected DomainExcluded";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainExcluded);
  }
}

TEST(Surface, PointValues) {
  const ParametricSurface s = tl_surface();
  expect_vec_near(s.point(1, 0), {1, 1, 1.4789429}, 1e-7);
  // eta(2) = sqrt(17) + asinh(4)/4 = 4.6467838...
  expect_vec_near(s.point(2, kPi), {-4, -2, std::sqrt(17.0) + std::asinh(4.0) / 4}, 1e-12);
  EXPECT_NEAR(s.point(2, kPi).x3, 4.6467838, 1e-7);
  for (double v : {0.0, 1.0, 2.0}) EXPECT_EQ(s.point(1.1, v).x3, s.point(1.1, 0.0).x3);
}

TEST(Surface, RotationalConstruction) {
  const ParametricSurface r = make_rotational(lightlike_profile());
  expect_vec_near(r.point(1.7, 0), profile_gamma(1.7), 1e-15);
  expect_vec_near(r.point(1, kPi / 2), {-1, 1, 1.4789429}, 1e-7);
  expect_vec_near(r.point(1.3, 0.4 + 2 * kPi), r.point(1.3, 0.4), 1e-12);
}

TEST(Surface, ClosedFormEqualsRotation) {
  const ParametricSurface a = tl_surface();
  const ParametricSurface b = make_rotational(lightlike_profile());
  for (int i = 0; i < 21; ++i) {
    const double u = 0.2 + 2.8 * i / 20;
    for (int j = 0; j < 21; ++j) {
      const double v = 2 * kPi * j / 21;
      expect_vec_near(a.point(u, v), b.point(u, v), 1e-13);
      const JVec3 ja = a.jet(u, v), jb = b.jet(u, v);
      for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t k = 0; k < kJetSize; ++k) {
          EXPECT_NEAR(ja[c].coefficients()[k], jb[c].coefficients()[k], 1e-12);
        }
      }
    }
  }
}

TEST(Surface, RotationalEquivariance) {
  const ParametricSurface s = tl_surface();
  for (int k = 0; k < 200; ++k) {
    const double u = oracle::signed_uniform(0.2, 3), v = oracle::uniform(0, 2 * kPi), c = oracle::uniform(-7, 7);
    expect_vec_near(rotation_timelike(c) * s.point(u, v), s.point(u, v + c), 1e-12 * (1 + u * u));
  }
}

TEST(Surface, JetRejectsExcludedBand) {
  const ParametricSurface s = tl_surface();
  EXPECT_TRUE(s.admissible(0.5, 3.0));
  EXPECT_FALSE(s.admissible(5e-4, 0.0));
  try {
    (void)s.jet(5e-4, 0.0);
    FAIL() << "expected DomainExcluded";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainExcluded);
  }
  EXPECT_NO_THROW((void)s.with_u_exclude(1e-5).jet(5e-4, 0.0));
}
