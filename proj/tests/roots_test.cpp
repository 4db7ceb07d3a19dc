#include <gtest/gtest.h>

#include <cmath>

#include "frontstab/errors.hpp"
#include "frontstab/roots.hpp"

namespace frontstab {
namespace {

TEST(Bisect, FindsSimpleRoots) {
  auto f = [](double x) { return x * x - 4.0; };
  const auto r = bisect(f, 1.0, 3.0, f(1.0), f(3.0));
  EXPECT_NEAR(r.root, 2.0, 1e-10);
  EXPECT_LT(std::abs(r.residual), 1e-12);
  EXPECT_LT(r.width, 1e-10);
}

TEST(Bisect, EndpointRootAndBadBracket) {
  auto f = [](double x) { return x - 1.0; };
  EXPECT_EQ(bisect(f, 1.0, 2.0, 0.0, 1.0).root, 1.0);
  EXPECT_THROW(bisect(f, 2.0, 3.0, 1.0, 2.0), std::invalid_argument);
}

TEST(Bisect, StopsAtMachineResolutionOnSteepFunctions) {
  auto f = [](double x) { return 1e20 * (x - 0.3); };
  const auto r = bisect(f, 0.0, 1.0, f(0.0), f(1.0));
  EXPECT_NEAR(r.root, 0.3, 1e-15);
  EXPECT_LT(r.iterations, 100);
}

TEST(ScanRoots, FindsEveryRootOfSine) {
  const auto scan = scan_roots([](double x) { return std::sin(x); }, 0.5, 10.0, 100);
  ASSERT_EQ(scan.roots.size(), 3u);
  for (int k = 1; k <= 3; ++k) EXPECT_NEAR(scan.roots[k - 1].root, k * M_PI, 1e-10);
}

TEST(ScanRoots, RootOnGridNodeReportedOnce) {
  const auto scan = scan_roots([](double x) { return x; }, -1.0, 1.0, 2);
  ASSERT_EQ(scan.roots.size(), 1u);
  EXPECT_EQ(scan.roots[0].root, 0.0);
}

TEST(ScanRoots, SkipsDegenerateCellsWithWarning) {
  auto f = [](double x) {
    if (std::abs(x - 0.5) < 0.06) throw DegenerateError("pole");
    return x - 0.25;
  };
  const auto scan = scan_roots(f, 0.0, 1.0, 20);
  ASSERT_EQ(scan.roots.size(), 1u);
  EXPECT_NEAR(scan.roots[0].root, 0.25, 1e-10);
  EXPECT_FALSE(scan.warnings.empty());
}

TEST(ScanRoots, EmptyWhenNoSignChange) {
  EXPECT_TRUE(scan_roots([](double x) { return 1.0 + x * x; }, -3.0, 3.0, 50).roots.empty());
  EXPECT_TRUE(scan_roots([](double x) { return x; }, 1.0, 0.0, 50).roots.empty());
}

}  // namespace
}  // namespace frontstab
