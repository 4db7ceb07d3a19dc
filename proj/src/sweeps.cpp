#include "frontstab/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frontstab/errors.hpp"
#include "frontstab/parallel.hpp"
#include "frontstab/roots.hpp"

namespace frontstab {

namespace {

void require_sorted(const std::vector<double>& grid, const char* name, bool strict) {
  if (grid.empty()) throw DomainError(std::string(name) + " must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const bool ok = strict ? grid[i] > grid[i - 1] : grid[i] >= grid[i - 1];
    if (!ok) throw DomainError(std::string(name) + " must be sorted increasing");
  }
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw DomainError("linspace: n must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

StabilityMap instability_map(const std::vector<double>& theta_grid,
                             const std::vector<double>& omega0_grid) {
  require_sorted(theta_grid, "theta grid", false);
  require_sorted(omega0_grid, "omega0 grid", false);
  StabilityMap map;
  map.theta_grid = theta_grid;
  map.omega0_grid = omega0_grid;
  map.lambda.assign(theta_grid.size(), std::vector<double>(omega0_grid.size(), 0.0));
  map.unstable.assign(theta_grid.size(), std::vector<bool>(omega0_grid.size(), false));

  // One writer per row; vector<bool> rows are separate allocations.
  parallel_for(theta_grid.size(), [&](std::size_t i) {
    auto& lam_row = map.lambda[i];
    auto& flag_row = map.unstable[i];
    for (std::size_t j = 0; j < omega0_grid.size(); ++j) {
      lam_row[j] = case2_lambda(theta_grid[i], omega0_grid[j]);
      flag_row[j] = lam_row[j] > 0.0;
    }
  });
  return map;
}

LevelSetCurve level_set_alpha_of_theta(const std::vector<double>& theta_samples,
                                       double alpha_search_max, const LevelSetOptions& opts) {
  require_sorted(theta_samples, "theta samples", false);
  if (!(alpha_search_max > 0.0)) throw DomainError("alpha_search_max must be positive");
  for (double t : theta_samples) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("theta samples must lie in (0,1)");
  }

  LevelSetCurve curve;
  curve.theta_samples = theta_samples;
  curve.alpha_of_theta.assign(theta_samples.size(), std::nullopt);
  const double alpha_lo = alpha_search_max / opts.scan_subintervals;
  const BisectionTolerances tol{opts.tol_res, opts.tol_alpha, 400};

  parallel_for(theta_samples.size(), [&](std::size_t i) {
    const double theta = theta_samples[i];
    auto f = [&](double alpha) { return case1_residual_F(alpha, theta, opts.lambda_probe); };
    const RootScan scan = scan_roots(f, alpha_lo, alpha_search_max, opts.scan_subintervals, tol);
    if (!scan.roots.empty()) curve.alpha_of_theta[i] = scan.roots.front().root;
  });
  return curve;
}

DispersionCurve dispersion_curve(const ModelParams& p, const std::vector<double>& omega_grid,
                                 double search_max, const GrowthRateOptions& opts) {
  validate(p);
  require_sorted(omega_grid, "omega grid", true);
  if (omega_grid.front() < 0.0) throw DomainError("omega grid must be nonnegative");

  DispersionCurve curve;
  curve.params = p;
  curve.samples.resize(omega_grid.size());
  parallel_for(omega_grid.size(), [&](std::size_t i) {
    curve.samples[i].omega = omega_grid[i];
    curve.samples[i].growth_rate = solve_growth_rate(p, omega_grid[i], search_max, opts);
  });

  for (const auto& s : curve.samples) {
    if (!s.growth_rate) continue;
    if (!curve.lambda_star || *s.growth_rate > *curve.lambda_star) {
      curve.lambda_star = s.growth_rate;
      curve.omega_star = s.omega;
    }
  }
  return curve;
}

bool has_interior_maximum(const DispersionCurve& curve) {
  if (!curve.omega_star) return false;
  std::optional<double> first_present;
  std::optional<double> last_present;
  for (const auto& s : curve.samples) {
    if (!s.growth_rate) continue;
    if (!first_present) first_present = s.omega;
    last_present = s.omega;
  }
  return *curve.omega_star > *first_present && *curve.omega_star < *last_present;
}

}  // namespace frontstab
