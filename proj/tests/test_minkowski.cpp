#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "rotsurf/minkowski.hpp"

using namespace rotsurf;

namespace {

LVec3 random_vec() { return {oracle::uniform(-3, 3), oracle::uniform(-3, 3), oracle::uniform(-3, 3)}; }

void expect_vec_near(const LVec3& a, const LVec3& b, double tol) {
  EXPECT_NEAR(a.x1, b.x1, tol);
  EXPECT_NEAR(a.x2, b.x2, tol);
  EXPECT_NEAR(a.x3, b.x3, tol);
}

}  // namespace

TEST(Minkowski, InnerProductSignature) {
  EXPECT_EQ(inner(LVec3{1, 0, 0}, LVec3{1, 0, 0}), 1.0);
  EXPECT_EQ(inner(LVec3{0, 0, 1}, LVec3{0, 0, 1}), -1.0);
  const LVec3 null{1, 1, std::sqrt(2.0)};
  EXPECT_NEAR(inner(null, null), 0.0, 1e-15);
}

TEST(Minkowski, CrossProductComponents) {
  expect_vec_near(cross(LVec3{1, 0, 0}, LVec3{0, 1, 0}), {0, 0, -1}, 0.0);
  expect_vec_near(cross(LVec3{0, 1, 0}, LVec3{0, 0, 1}), {1, 0, 0}, 0.0);
  const LVec3 p{0.3, -1.2, 2.5};
  expect_vec_near(cross(p, p), {0, 0, 0}, 0.0);
}

TEST(Minkowski, Norm) {
  EXPECT_DOUBLE_EQ(norm({0, 0, 2}), 2.0);
  EXPECT_DOUBLE_EQ(norm({3, 0, 5}), 4.0);
  EXPECT_NEAR(norm({1, 1, std::sqrt(2.0)}), 0.0, 1e-7);
}

TEST(Minkowski, CausalCharacter) {
  EXPECT_EQ(causal_character({0, 0, 1}), CausalCharacter::Timelike);
  EXPECT_EQ(causal_character({1, 1, std::sqrt(2.0)}), CausalCharacter::Lightlike);
  EXPECT_EQ(causal_character({0, 0, 0}), CausalCharacter::Spacelike);
  EXPECT_EQ(causal_character({1, 0, 0.5}), CausalCharacter::Spacelike);
}

TEST(Minkowski, RotationAboutTimelikeAxis) {
  const LMat3 id = rotation_timelike(0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id(i, j), i == j ? 1.0 : 0.0);
  }
  expect_vec_near(rotation_timelike(std::numbers::pi / 2) * LVec3{1, 0, 0}, {0, 1, 0}, 1e-15);
  expect_vec_near(rotation_timelike(1.3) * LVec3{0, 0, 1}, {0, 0, 1}, 0.0);
}

TEST(Minkowski, LorentzRotationPredicate) {
  EXPECT_TRUE(is_lorentz_rotation(rotation_timelike(0.8), 1e-12));
  EXPECT_FALSE(is_lorentz_rotation(2.0 * LMat3::identity(), 1e-12));
  EXPECT_TRUE(is_lorentz_rotation(rotation_timelike(2 * std::numbers::pi), 1e-12));
  // A boost preserves the metric but moves the axis.
  const double ch = std::cosh(0.4), sh = std::sinh(0.4);
  LMat3 boost = LMat3::identity();
  boost(0, 0) = ch;
  boost(0, 2) = sh;
  boost(2, 0) = sh;
  boost(2, 2) = ch;
  EXPECT_FALSE(is_lorentz_rotation(boost, 1e-12));
}

TEST(MinkowskiProperties, Bilinearity) {
  for (int k = 0; k < 200; ++k) {
    const double a = oracle::uniform(-2, 2), b = oracle::uniform(-2, 2);
    const LVec3 p = random_vec(), q = random_vec(), r = random_vec();
    const double lhs = inner(a * p + b * q, r);
    const double rhs = a * inner(p, r) + b * inner(q, r);
    const double scale = std::abs(a) * euclidean_norm(p) * euclidean_norm(r) +
                         std::abs(b) * euclidean_norm(q) * euclidean_norm(r) + 1.0;
    EXPECT_LE(std::abs(lhs - rhs) / scale, 1e-12);
    EXPECT_EQ(inner(p, q), inner(q, p));
  }
}

TEST(MinkowskiProperties, CrossProductIsOrthogonalToFactors) {
  for (int k = 0; k < 200; ++k) {
    const LVec3 p = random_vec(), q = random_vec();
    const LVec3 c = cross(p, q);
    const double scale = euclidean_norm(c) * (euclidean_norm(p) + euclidean_norm(q)) + 1.0;
    EXPECT_LE(std::abs(inner(c, p)) / scale, 1e-12);
    EXPECT_LE(std::abs(inner(c, q)) / scale, 1e-12);
    expect_vec_near(cross(q, p), -c, 1e-12);
  }
}

TEST(MinkowskiProperties, RotationGroupLaw) {
  for (int k = 0; k < 100; ++k) {
    const double a = oracle::uniform(-7, 7), b = oracle::uniform(-7, 7);
    const LMat3 lhs = rotation_timelike(a) * rotation_timelike(b);
    const LMat3 rhs = rotation_timelike(a + b);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(lhs(i, j), rhs(i, j), 1e-12);
    }
    EXPECT_TRUE(is_lorentz_rotation(rotation_timelike(a), 1e-12));
  }
}
