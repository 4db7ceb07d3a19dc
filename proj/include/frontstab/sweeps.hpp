#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frontstab/dispersion.hpp"
#include "frontstab/model.hpp"

namespace frontstab {

/// Sign of the small-alpha growth rate over a (theta, omega0) grid.
struct StabilityMap {
  std::vector<double> theta_grid;
  std::vector<double> omega0_grid;
  std::vector<std::vector<double>> lambda;  // [theta][omega0], case2_lambda
  std::vector<std::vector<bool>> unstable;  // lambda > 0
};

StabilityMap instability_map(const std::vector<double>& theta_grid,
                             const std::vector<double>& omega0_grid);

/// theta -> smallest alpha in (0, alpha_search_max] where
/// alpha -> case1_residual_F(alpha, theta, +tol_lam) changes sign.
struct LevelSetCurve {
  std::vector<double> theta_samples;
  std::vector<std::optional<double>> alpha_of_theta;
};

struct LevelSetOptions {
  int scan_subintervals = 2000;
  double tol_res = 1e-12;
  double tol_alpha = 1e-10;
  double lambda_probe = 1e-10;  // evaluate F just on the lambda > 0 side
};

LevelSetCurve level_set_alpha_of_theta(const std::vector<double>& theta_samples,
                                       double alpha_search_max,
                                       const LevelSetOptions& opts = {});

struct DispersionSample {
  double omega = 0.0;
  std::optional<double> growth_rate;
};

struct DispersionCurve {
  ModelParams params;
  std::vector<DispersionSample> samples;
  std::optional<double> omega_star;
  std::optional<double> lambda_star;
};

DispersionCurve dispersion_curve(const ModelParams& p, const std::vector<double>& omega_grid,
                                 double search_max = 10.0, const GrowthRateOptions& opts = {});

/// True when the maximizing sample is neither the first nor the last sample
/// with a root, i.e. growth falls off on both sides of omega_star.
bool has_interior_maximum(const DispersionCurve& curve);

/// n evenly spaced points from lo to hi inclusive (n == 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace frontstab
