// Stated limits and identities asserted exactly as stated. These are kept
// separate from the regression tests because several of them do not hold for
// the exact relation; see README "Known discrepancies".
#include <gtest/gtest.h>

#include <cmath>

#include "frontstab/dispersion.hpp"
#include "test_support.hpp"

namespace frontstab {
namespace {

using testing::random_params;
using testing::uniform;

double case1_limit(double theta) { return -0.5 * (1 - theta) / theta; }

TEST(StatedOneDimensionalLimit, HalfThreshold) {
  const auto lam = solve_growth_rate({1e-4, 0.5}, 0.0, 5.0);
  ASSERT_TRUE(lam.has_value()) << "no nontrivial real root above lambda_floor = "
                               << lambda_floor({1e-4, 0.5}, 0.0);
  EXPECT_NEAR(*lam, -0.5, 0.02);
}

TEST(StatedOneDimensionalLimit, QuarterThreshold) {
  const auto lam = solve_growth_rate({1e-4, 0.25}, 0.0, 5.0);
  ASSERT_TRUE(lam.has_value()) << "no nontrivial real root above lambda_floor = "
                               << lambda_floor({1e-4, 0.25}, 0.0);
  EXPECT_NEAR(*lam, -1.5, 0.05);
}

TEST(StatedOneDimensionalLimit, MonotoneConvergenceInAlpha) {
  for (double t : {0.25, 0.5, 0.75}) {
    double previous = INFINITY;
    for (double a : {1e-2, 1e-3, 1e-4}) {
      const auto lam = solve_growth_rate({a, t}, 0.0, 5.0);
      ASSERT_TRUE(lam.has_value()) << "theta=" << t << " alpha=" << a;
      const double err = std::abs(*lam - case1_limit(t));
      EXPECT_LT(err, previous);
      previous = err;
    }
  }
}

TEST(StatedOneDimensionalLimit, PrintedResidualRootApproachesLimit) {
  // Root of lam -> F(alpha, theta, lam) away from the translation root, small alpha.
  for (double t : {0.25, 0.5, 0.75}) {
    const double a = 1e-4;
    const double floor = -(1 - t) * (1 - t) * a / (4 * (a * t) * (t + a * (1 - t))) + 1e-12;
    bool found = false;
    double prev_lam = floor, prev_f = case1_residual_F(a, t, floor);
    for (int i = 1; i <= 20000 && !found; ++i) {
      const double lam = floor + (5.0 - floor) * i / 20000;
      const double f = case1_residual_F(a, t, lam);
      if (prev_f * f < 0 && std::abs(lam) > 1e-6 && std::abs(prev_lam) > 1e-6) {
        EXPECT_NEAR(lam, case1_limit(t), 0.02 * std::abs(case1_limit(t)));
        found = true;
      }
      prev_lam = lam;
      prev_f = f;
    }
    EXPECT_TRUE(found) << "theta=" << t;
  }
}

TEST(PrintedOneDimensionalResidual, EqualsExactRelationOnRandomSamples) {
  int mismatches = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_params();
    const double lam = uniform(lambda_floor(p, 0.0), 5.0);
    const double diff = std::abs(case1_residual_F(p.alpha, p.theta, lam) -
                                 dispersion_residual({p, 0.0, lam}));
    if (diff > 1e-10) ++mismatches;
    worst = std::max(worst, diff);
  }
  EXPECT_EQ(mismatches, 0) << "largest |F - G| = " << worst;
}

}  // namespace
}  // namespace frontstab
