#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "geobound/nelder_mead.hpp"
#include "geobound/search.hpp"
#include "geobound/verify.hpp"

using namespace geobound;

namespace {

const TraceTriple kS1{std::sqrt(2.0), std::sqrt(2.0), 2.0, 0.0};

SearchConfig config_for(unsigned n) {
  SearchConfig c;
  c.n = n;
  return c;
}

}  // namespace

TEST(NelderMead, Rosenbrock) {
  auto f = [](const std::array<double, 2>& p) {
    return 100.0 * std::pow(p[1] - p[0] * p[0], 2) + std::pow(1.0 - p[0], 2);
  };
  NelderMeadOptions opt;
  opt.tol = 1e-10;
  const auto res = nelder_mead<2>(f, {-1.2, 1.0}, 0.5, opt);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.x[0], 1.0, 1e-6);
  EXPECT_NEAR(res.x[1], 1.0, 1e-6);
}

TEST(NelderMead, InfeasibleRegionIsAvoided) {
  auto f = [](const std::array<double, 2>& p) {
    if (p[0] < 0.0) return std::numeric_limits<double>::infinity();
    return (p[0] - 0.0) * (p[0] - 0.0) + (p[1] - 2.0) * (p[1] - 2.0) + p[0];
  };
  const auto res = nelder_mead<2>(f, {1.0, 1.0}, 0.3);
  EXPECT_GE(res.x[0], 0.0);
  EXPECT_NEAR(res.x[1], 2.0, 1e-6);
  EXPECT_NEAR(res.value, 0.0, 1e-8);
}

TEST(Objective, Fixtures) {
  EXPECT_NEAR(objective_value(s3_triple(), 3, 2.2 * solve_ln(3)), known_L(3), 1e-8);
  EXPECT_NEAR(objective_value(kS1, 1, 2.2 * solve_ln(1)), known_L(1), 1e-12);
  EXPECT_NEAR(objective_value(kS1, 2, 2.2 * solve_ln(2)), known_L(2), 1e-12);
}

TEST(Objective, InfeasibleBelowCutoff) {
  EXPECT_FALSE(objective(kS1, 2, 2.0).has_value());
  EXPECT_TRUE(std::isinf(objective_value(kS1, 2, 2.0)));
}

TEST(Objective, InvariantUnderRemarking) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> pos(1, 3);
  for (int i = 0; i < 40; ++i) {
    const TraceTriple x = random_cusped_triple(rng);
    TraceTriple y = x;
    for (int k = 0; k < 5; ++k) y = markov_move(y, static_cast<Position>(pos(rng)));
    for (unsigned n = 1; n <= 4; ++n) {
      const double cutoff = 2.2 * solve_ln(n);
      const double a = objective_value(x, n, cutoff), b = objective_value(y, n, cutoff);
      if (std::isinf(a)) {
        EXPECT_TRUE(std::isinf(b));
      } else {
        EXPECT_NEAR(a, b, 1e-8);
      }
    }
  }
}

TEST(GridSearch, CoarseValuesNearKnownConstants) {
  EXPECT_NEAR(grid_search(config_for(1)).value, known_L(1), 0.05);
  EXPECT_NEAR(grid_search(config_for(2)).value, known_L(2), 0.05);
  EXPECT_LE(grid_search(config_for(3)).value, known_L(3) + 0.05);
}

TEST(GridSearch, ParallelMatchesSerial) {
  auto c = config_for(3);
  const auto serial = grid_search(c);
  c.jobs = 4;
  const auto parallel = grid_search(c);
  EXPECT_EQ(serial.value, parallel.value);
  EXPECT_EQ(serial.search_r, parallel.search_r);
  EXPECT_EQ(serial.search_s, parallel.search_s);
}

TEST(GridSearch, InfeasibleGridThrows) {
  auto c = config_for(2);
  c.grid_lo = 1.01;
  c.grid_hi = 1.02;
  EXPECT_THROW(grid_search(c), SearchFailure);
}

TEST(GridSearch, ConfigValidation) {
  auto c = config_for(2);
  c.grid_lo = 1.0;
  EXPECT_THROW(grid_search(c), DomainError);
  c = config_for(2);
  c.grid_steps = 1;
  EXPECT_THROW(grid_search(c), DomainError);
  c = config_for(2);
  c.cutoff_factor = 1.5;
  EXPECT_THROW(grid_search(c), DomainError);
}

TEST(GridSearch, NoPointBeatsL3) {
  // sharpness probe over (1, 5]
  SearchConfig c = config_for(3);
  c.grid_lo = 1.0 + 1e-3;
  c.grid_hi = 5.0;
  c.grid_steps = 120;
  const Length cutoff = search_cutoff(c);
  const double pitch = (c.grid_hi - c.grid_lo) / (c.grid_steps - 1);
  for (int i = 0; i < c.grid_steps; ++i)
    for (int j = 0; j < c.grid_steps; ++j) {
      const auto e = evaluate_point(c.grid_lo + i * pitch, c.grid_lo + j * pitch, 3, cutoff);
      if (e) {
        ASSERT_GE(e->value(), known_L(3) - 1e-8);
      }
    }
}

TEST(Refine, ReachesL2AndL3) {
  for (unsigned n : {2u, 3u}) {
    const auto c = config_for(n);
    const auto start = grid_search(c);
    const auto res = refine(start, c);
    EXPECT_NEAR(res.value, known_L(n), 1e-6) << n;
    EXPECT_LE(res.value, start.value);
    EXPECT_TRUE(res.converged);
  }
}

TEST(Refine, OptimalStartIsKept) {
  auto c = config_for(2);
  const auto first = refine(grid_search(c), c);
  const auto again = refine(first, c);
  EXPECT_LE(again.value, first.value);
  EXPECT_NEAR(again.value, first.value, 1e-12);
}

TEST(Refine, IterationCapIsReportedUnconverged) {
  auto c = config_for(3);
  c.max_refine_iters = 3;
  const auto start = grid_search(c);
  const auto res = refine(start, c);
  EXPECT_FALSE(res.converged);
  EXPECT_LE(res.value, start.value);
}

TEST(FindExtremal, NEqualsOne) {
  const auto res = find_extremal(config_for(1));
  EXPECT_NEAR(res.value, known_L(1), 1e-6);
  EXPECT_NEAR(res.triple.r, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(res.triple.s, std::sqrt(2.0), 1e-4);
  EXPECT_NEAR(res.triple.t, 2.0, 1e-4);
  EXPECT_FALSE(res.torus_restricted);
}

TEST(FindExtremal, NEqualsThreeArgmin) {
  const auto res = find_extremal(config_for(3));
  EXPECT_NEAR(res.value, known_L(3), 1e-6);
  EXPECT_LT(std::fabs(res.triple.s - res.triple.t), 1e-5);
  EXPECT_LT(std::fabs(res.triple.r - s3_r_star()), 1e-5);
  EXPECT_EQ(res.pair.crossings, 3);
  EXPECT_EQ(res.value, res.pair.max_length());
}

TEST(FindExtremal, CertificatesBracketValue) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto res = find_extremal(config_for(n));
    EXPECT_GE(res.value, res.certificates.l_n) << n;
    EXPECT_LE(res.value, res.certificates.u_n) << n;
    EXPECT_EQ(res.pair.crossings, static_cast<std::int64_t>(n));
    EXPECT_EQ(res.torus_restricted, n >= 4);
  }
}
