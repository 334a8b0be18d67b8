#include <cmath>

#include <gtest/gtest.h>

#include "geobound/bounds.hpp"
#include "geobound/matrix_oracle.hpp"
#include "geobound/search.hpp"

using namespace geobound;

TEST(KnownL, ClosedForms) {
  EXPECT_NEAR(known_L(1), 1.7627471740390861, 1e-14);
  EXPECT_NEAR(known_L(2), 2.6339157938496334, 1e-14);
  EXPECT_NEAR(known_L(3), 3.2582430019661745, 1e-14);
  // half-trace "2.648" of the three-crossing pair
  EXPECT_NEAR(l3_halftrace(), 2.6477473561073080, 1e-14);
  EXPECT_THROW(known_L(4), UnknownConstant);
  EXPECT_THROW(known_L(0), UnknownConstant);
  EXPECT_EQ(known_L_symbolic(2), "2*arccosh(2)");
}

TEST(KnownL, L2IsFixedPointOfTwoCrossingFormula) {
  EXPECT_NEAR(min_two_crossing_partner(known_L(2), 0.0), known_L(2), 1e-12);
}

TEST(FourHoledSphere, Bound) {
  EXPECT_NEAR(four_holed_sphere_bound(), 3.5254943480781721, 1e-14);
  EXPECT_NEAR(four_holed_sphere_bound(), 2.0 * std::acosh(3.0), 1e-12);
  EXPECT_GT(four_holed_sphere_bound(), known_L(2));
}

TEST(S3Triple, Coordinates) {
  const auto x = s3_triple();
  EXPECT_NEAR(x.r, 1.2287135538781691, 1e-14);
  EXPECT_NEAR(x.s, 1.8167271227604854, 1e-14);
  EXPECT_EQ(x.s, x.t);
  EXPECT_NEAR(cusp_relation_residual(x), 0.0, 1e-10);
  EXPECT_NEAR(x.s * (2.0 * x.r - 1.0), l3_halftrace(), 1e-10);
  EXPECT_NEAR(2.0 * x.r * x.t - x.s, l3_halftrace(), 1e-10);
  EXPECT_EQ(normalize(x), x);
}

TEST(BSquaredCurve, MinimizerAndValue) {
  const double r = s3_r_star();
  EXPECT_NEAR(6.0 * r * r - 9.0 * r + 2.0, 0.0, 1e-10);
  const double q = std::sqrt(11.0 / 3.0);
  EXPECT_NEAR(b_squared_curve(r), 0.5 * (7.0 + 11.0 / 3.0 * q), 1e-12);
  EXPECT_THROW(b_squared_curve(1.0), DomainError);
}

TEST(BSquaredCurve, GoldenSectionFindsRStar) {
  // test-side golden-section search on (1.001, 10)
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 1.001, b = 10.0;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  while (b - a > 1e-12) {
    if (b_squared_curve(c) < b_squared_curve(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - phi * (b - a);
    d = a + phi * (b - a);
  }
  EXPECT_NEAR(0.5 * (a + b), s3_r_star(), 1e-8);
}

TEST(Construction, NEqualsOne) {
  const auto c = construction_upper_bound(1);
  EXPECT_NEAR(c.triple.r, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.triple.s, std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.triple.t, 2.0, 1e-12);
  EXPECT_NEAR(c.u_n, 2.0 * std::acosh(2.0), 1e-12);
  EXPECT_GT(c.u_n, known_L(1));
}

TEST(Construction, NEqualsTwo) {
  const auto c = construction_upper_bound(2);
  EXPECT_NEAR(c.u_n, 3.7786115092141878, 1e-11);
  EXPECT_LT(c.u_n, 2.0 * solve_ln(2));
  // delta^2 alpha is slope (2,1) in the marking (delta, alpha, delta alpha)
  EXPECT_NEAR(matrix_oracle_halftrace(c.triple, {2, 1}), c.recursion[2], 1e-9 * c.recursion[2]);
  EXPECT_NEAR(halftrace_of_slope(c.triple, {2, 1}), c.recursion[2], 1e-12);
}

TEST(Construction, SandwichAndCuspVarietyUpToTen) {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto c = construction_upper_bound(n);
    const double l = solve_ln(n);
    EXPECT_LT(std::fabs(cusp_relation_residual(c.triple)), 1e-9) << n;
    EXPECT_LE(l, c.u_n);
    EXPECT_GT(2.0 * l - c.u_n, 0.0) << n;
    for (unsigned k = 1; k <= n; ++k) EXPECT_GT(c.recursion[k], c.recursion[k - 1]);
    // the constructed pair crosses n times
    EXPECT_EQ(intersection_number({0, 1}, {static_cast<std::int64_t>(n), 1}), static_cast<std::int64_t>(n));
  }
}

TEST(Construction, WitnessPairIsFeasibleForTheObjective) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto c = construction_upper_bound(n);
    const double f = objective_value(c.triple, n, 2.2 * solve_ln(n));
    EXPECT_LE(f, c.u_n + 1e-9) << n;
  }
}

TEST(SandwichReport, Examples) {
  const auto r1 = sandwich_report(1);
  EXPECT_TRUE(r1.sandwich_ok);
  ASSERT_TRUE(r1.known_L_n);
  EXPECT_NEAR(*r1.known_L_n, r1.l_n, 1e-12);

  const auto r2 = sandwich_report(2);
  EXPECT_TRUE(r2.sandwich_ok);
  EXPECT_LE(r2.l_n, *r2.known_L_n);
  EXPECT_LE(*r2.known_L_n, r2.upper_u_n);
  EXPECT_LT(r2.upper_u_n, 2.0 * r2.l_n);

  const auto r10 = sandwich_report(10);
  EXPECT_TRUE(r10.sandwich_ok);
  EXPECT_FALSE(r10.known_L_n);
}

TEST(SandwichReport, KnownConstantsInsideInterval) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto r = sandwich_report(n);
    EXPECT_GE(*r.known_L_n, r.l_n - 1e-12);
    EXPECT_LE(*r.known_L_n, r.upper_u_n);
  }
}
