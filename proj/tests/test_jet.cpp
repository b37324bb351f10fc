#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "rotsurf/jet.hpp"
#include "rotsurf/surfaces.hpp"

using namespace rotsurf;

namespace {

Jet2 random_jet() {
  Jet2 j;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) j.set_coeff(a, b, oracle::uniform(-2, 2));
  }
  return j;
}

void expect_jets_near(const Jet2& x, const Jet2& y, double tol) {
  for (std::size_t i = 0; i < kJetSize; ++i) {
    const double scale = std::max(1.0, std::abs(y.coefficients()[i]));
    EXPECT_LE(std::abs(x.coefficients()[i] - y.coefficients()[i]) / scale, tol) << "slot " << i;
  }
}

}  // namespace

TEST(Jet, Seeds) {
  const Jet2 u = Jet2::seed_u(2.0);
  EXPECT_EQ(u.value(), 2.0);
  EXPECT_EQ(u.coeff(1, 0), 1.0);
  EXPECT_EQ(u.coeff(0, 1), 0.0);
  EXPECT_EQ(u.coeff(2, 0), 0.0);

  const Jet2 c = Jet2::constant(5.0);
  EXPECT_EQ(c.value(), 5.0);
  for (std::size_t i = 1; i < kJetSize; ++i) EXPECT_EQ(c.coefficients()[i], 0.0);

  const Jet2 v = Jet2::seed_v(-1.0);
  EXPECT_EQ(v.value(), -1.0);
  EXPECT_EQ(v.coeff(0, 1), 1.0);
  EXPECT_EQ(v.coeff(1, 0), 0.0);
}

TEST(Jet, PolynomialProducts) {
  const Jet2 u = Jet2::seed_u(1.0), v = Jet2::seed_v(2.0);
  const Jet2 f = u * u * v;
  EXPECT_DOUBLE_EQ(f.value(), 2.0);
  EXPECT_DOUBLE_EQ(partial(f, 1, 0), 4.0);
  EXPECT_DOUBLE_EQ(partial(f, 0, 1), 1.0);
  EXPECT_DOUBLE_EQ(f.coeff(2, 0), 2.0);
  EXPECT_DOUBLE_EQ(partial(f, 2, 0), 4.0);
  EXPECT_DOUBLE_EQ(partial(f, 1, 1), 2.0);
  EXPECT_DOUBLE_EQ(f.coeff(2, 1), 1.0);

  const Jet2 s = Jet2::seed_u(0.0) + Jet2::seed_v(0.0);
  const Jet2 cube = s * s * s;
  EXPECT_DOUBLE_EQ(cube.coeff(3, 0), 1.0);
  EXPECT_DOUBLE_EQ(cube.coeff(2, 1), 3.0);
  EXPECT_DOUBLE_EQ(cube.coeff(1, 2), 3.0);
  EXPECT_DOUBLE_EQ(cube.coeff(0, 3), 1.0);
}

TEST(Jet, QuotientOfItselfIsOne) {
  const Jet2 u = Jet2::seed_u(0.7), v = Jet2::seed_v(-0.4);
  const Jet2 f = sin(u) * v + 3.0 + u * u * u;
  expect_jets_near(f / f, Jet2::constant(1.0), 1e-14);
}

TEST(Jet, DivisionNearZeroIsReported) {
  const Jet2 z = Jet2::seed_u(0.0);
  try {
    (void)(Jet2::constant(1.0) / z);
    FAIL() << "expected DivisionNearZero";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionNearZero);
  }
}

TEST(Jet, ElementaryFunctions) {
  const Jet2 u = Jet2::seed_u(1.0);
  const Jet2 r = sqrt(4.0 * u * u + 1.0);
  EXPECT_NEAR(r.value(), 2.2360680, 1e-7);
  EXPECT_NEAR(partial(r, 1, 0), 1.7888544, 1e-7);

  const Jet2 s = sin(Jet2::seed_u(std::numbers::pi / 6));
  EXPECT_NEAR(s.value(), 0.5, 1e-15);
  EXPECT_NEAR(partial(s, 1, 0), 0.8660254, 1e-7);

  const Jet2 a = asinh(2.0 * u);
  EXPECT_NEAR(a.value(), 1.4436355, 1e-7);
  EXPECT_NEAR(partial(a, 1, 0), 0.8944272, 1e-7);
}

TEST(Jet, SqrtDomainIsReported) {
  try {
    (void)sqrt(Jet2::seed_u(-1.0));
    FAIL() << "expected SqrtDomain";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SqrtDomain);
  }
}

TEST(Jet, Partials) {
  const Jet2 u = Jet2::seed_u(2.0);
  EXPECT_DOUBLE_EQ(partial(u * u * u, 3, 0), 6.0);
  EXPECT_DOUBLE_EQ(partial(sin(Jet2::seed_u(0.0)), 3, 0), -1.0);
  EXPECT_DOUBLE_EQ(partial(Jet2::seed_u(3.0) * Jet2::seed_v(4.0), 1, 1), 1.0);
  try {
    (void)partial(u, 2, 2);
    FAIL() << "expected OrderTooHigh";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderTooHigh);
  }
}

TEST(Jet, DifferentiationShiftsCoefficients) {
  const Jet2 u = Jet2::seed_u(1.5), v = Jet2::seed_v(0.3);
  const Jet2 f = u * u * u * v;
  const Jet2 fu = d_du(f);
  EXPECT_NEAR(fu.value(), partial(f, 1, 0), 1e-14);
  EXPECT_NEAR(partial(fu, 1, 0), partial(f, 2, 0), 1e-14);
  EXPECT_NEAR(partial(fu, 1, 1), partial(f, 2, 1), 1e-14);
  EXPECT_EQ(fu.coeff(3, 0), 0.0);
}

TEST(JetProperties, Distributivity) {
  for (int k = 0; k < 200; ++k) {
    const Jet2 a = random_jet(), b = random_jet(), c = random_jet();
    expect_jets_near((a + b) * c, a * c + b * c, 1e-13);
    expect_jets_near(a * b, b * a, 1e-15);
  }
}

TEST(JetProperties, PythagoreanIdentity) {
  for (int k = 0; k < 200; ++k) {
    const Jet2 j = random_jet();
    const Jet2 s = sin(j), c = cos(j);
    expect_jets_near(s * s + c * c, Jet2::constant(1.0), 1e-12);
  }
}

TEST(JetProperties, QuotientInvertsProduct) {
  for (int k = 0; k < 200; ++k) {
    Jet2 a = random_jet(), b = random_jet();
    b.set_coeff(0, 0, 1.0 + oracle::uniform(0, 2));
    expect_jets_near((a * b) / b, a, 1e-12);
  }
}

// Every partial of order <= 3 of eta' and of the chart components against
// quad-precision Richardson central differences at 50 random points.
TEST(JetProperties, MatchesFiniteDifferenceOracle) {
  const ParametricSurface s = tl_surface();
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double u = oracle::signed_uniform(0.2, 3.0), v = oracle::uniform(0.0, 2 * std::numbers::pi);
    const JVec3 R = s.jet(u, v);
    const Jet2 ep = eta_prime(Jet2::seed_u(u) + 0.0 * Jet2::seed_v(v));
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) {
        for (int i = 0; i < 3; ++i) {
          const double want = oracle::fd_partial(oracle::surface_component_q(i), u, v, a, b);
          const double got = partial(R[static_cast<std::size_t>(i)], a, b);
          worst = std::max(worst, oracle::rel_err(got, want));
        }
        const double want = oracle::fd_partial([](oracle::quad x, oracle::quad) { return oracle::eta_prime_q(x); },
                                               u, v, a, b);
        worst = std::max(worst, oracle::rel_err(partial(ep, a, b), want));
      }
    }
  }
  EXPECT_LE(worst, 1e-6);
}
