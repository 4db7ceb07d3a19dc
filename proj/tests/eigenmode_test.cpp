#include <gtest/gtest.h>

#include <cmath>

#include "frontstab/dispersion.hpp"
#include "frontstab/eigenmode.hpp"
#include "frontstab/errors.hpp"
#include "frontstab/wave.hpp"
#include "test_support.hpp"

namespace frontstab {
namespace {

TEST(Eigenmode, TranslationModeIsProfileDerivative) {
  for (const ModelParams p : {ModelParams{0.25, 0.5}, ModelParams{0.01, 0.1}, ModelParams{1.5, 0.8}}) {
    const auto mode = eigenmode(p, 0.0, 0.0);
    EXPECT_NEAR(mode.C, 0.0, 1e-12);
    const double ref = eval_profile_derivative(p, 0.0).first;
    const double k = mode.A / ref;  // u1 = k u0'
    const double width = wave_constants(p).beta / std::min(p.theta, 1 - p.theta);
    for (int i = -200; i <= 200; ++i) {
      const double x = 0.05 * i * width;
      const auto [u1, v1] = mode(x);
      const auto [du, dv] = eval_profile_derivative(p, x);
      EXPECT_NEAR(u1, k * du, 1e-8 * std::abs(k * ref)) << x;
      EXPECT_NEAR(v1, k * dv, 1e-8 * std::abs(k * ref)) << x;
    }
  }
}

TEST(Eigenmode, ContinuityAndJumpConditions) {
  const ModelParams p{0.1, 0.1};
  const double omega = 2.0;
  const auto lam = solve_growth_rate(p, omega, 10.0);
  ASSERT_TRUE(lam.has_value());
  const auto mode = eigenmode(p, omega, *lam);
  const double beta = wave_constants(p).beta;

  const auto right = mode(0.0);
  const auto left = mode(-1e-300);
  EXPECT_NEAR(right.first, left.first, 1e-14 * std::abs(right.first));
  EXPECT_NEAR(right.second, left.second, 1e-14 * std::abs(right.second));

  const auto d_right = mode.derivative(0.0);
  const auto d_left = mode.derivative_left_of_zero();
  const double u0 = right.first;
  EXPECT_NEAR(-p.alpha * (d_right.first - d_left.first), p.alpha / beta * u0, 1e-10 * std::abs(u0 / beta));
  EXPECT_NEAR(d_right.second - d_left.second, p.alpha / beta * u0, 1e-10 * std::abs(u0 / beta));
}

TEST(Eigenmode, DecaysInBothDirections) {
  const ModelParams p{0.1, 0.4};
  const double omega = 1.0;
  const auto lam = solve_growth_rate(p, omega, 10.0);
  ASSERT_TRUE(lam.has_value());
  const auto mode = eigenmode(p, omega, *lam);
  EXPECT_LT(mode.roots.r_minus, 0.0);
  EXPECT_LT(mode.roots.s_minus, 0.0);
  EXPECT_GT(mode.roots.r_plus, 0.0);
  EXPECT_GT(mode.roots.mu_plus, 0.0);
  const auto far_left = mode(-200.0);
  const auto far_right = mode(200.0);
  EXPECT_LT(std::abs(far_left.first) + std::abs(far_left.second), 1e-8);
  EXPECT_LT(std::abs(far_right.first) + std::abs(far_right.second), 1e-8);
}

TEST(Eigenmode, SatisfiesLinearizedOdesAwayFromOrigin) {
  const ModelParams p{0.1, 0.1};
  const double omega = 2.0;
  const double lam = *solve_growth_rate(p, omega, 10.0);
  const auto mode = eigenmode(p, omega, lam);
  const double sigma = wave_constants(p).sigma;
  const double h = 1e-4;
  for (double x : {-0.3, -0.05, 0.05, 0.3}) {
    const auto m = mode(x - h), z = mode(x), q = mode(x + h);
    const double du = (q.first - m.first) / (2 * h), ddu = (q.first - 2 * z.first + m.first) / (h * h);
    const double dv = (q.second - m.second) / (2 * h), ddv = (q.second - 2 * z.second + m.second) / (h * h);
    const double react = x < 0 ? z.second / p.alpha : 0.0;
    const double ru = lam * z.first - sigma * du - p.alpha * ddu + p.alpha * omega * omega * z.first - react;
    const double rv = lam * z.second - sigma * dv - ddv + omega * omega * z.second + react;
    const double scale = std::abs(ddu) + std::abs(ddv) + 1.0;
    EXPECT_LT(std::abs(ru) / scale, 1e-5) << x;
    EXPECT_LT(std::abs(rv) / scale, 1e-5) << x;
  }
}

TEST(Eigenmode, RejectsPointsOffTheManifold) {
  EXPECT_THROW(eigenmode({0.25, 0.5}, 1.0, 0.3), NotOnManifoldError);
}

}  // namespace
}  // namespace frontstab
