#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontstab/model.hpp"

namespace frontstab {

/// A candidate transversal mode eps * exp(growth_rate * t) * cos(omega * y).
struct SpectralQuery {
  ModelParams params;
  double omega = 0.0;        // transversal wavenumber, >= 0
  double growth_rate = 0.0;  // real eigenvalue candidate
};

/// Exponents of the piecewise-exponential eigenfunction and the particular
/// solution coupling gamma on x < 0.
struct SpectralRoots {
  double r_plus = 0.0;   // u1 on x < 0
  double r_minus = 0.0;  // u1 on x > 0
  double s_minus = 0.0;  // v1 on x > 0
  double mu_plus = 0.0;  // v1 on x < 0
  double gamma = 0.0;
};

/// Smallest growth rate for which all four exponents are real. Always negative.
double lambda_floor(const ModelParams& p, double omega);

/// Throws AdmissibilityError if q.growth_rate < lambda_floor(q.params, q.omega),
/// DomainError on invalid params or negative omega.
SpectralRoots spectral_roots(const SpectralQuery& q);

/// G = beta (r+ - r-) + 1 / (alpha (mu+ - r-)(mu+ - s-)) - 1.
/// A bounded eigenmode exists iff G = 0. Throws DegenerateError when a
/// denominator factor vanishes.
double dispersion_residual(const SpectralQuery& q);

struct GrowthRateOptions {
  int scan_subintervals = 2000;
  double tol_res = 1e-12;
  double tol_lam = 1e-10;
  double floor_offset = 1e-9;  // scan starts this far above lambda_floor
};

struct GrowthRateScan {
  std::optional<double> growth_rate;  // largest nontrivial root
  std::vector<double> roots;          // every bracketed root, ascending, incl. the trivial one
  std::vector<std::string> warnings;
};

/// Largest real root of the dispersion relation in
/// (lambda_floor + floor_offset, search_max]. At omega = 0 the translation
/// root lambda = 0 (|lambda| < 10 tol_lam) is excluded.
GrowthRateScan solve_growth_rate_detailed(const ModelParams& p, double omega, double search_max,
                                          const GrowthRateOptions& opts = {});

std::optional<double> solve_growth_rate(const ModelParams& p, double omega, double search_max,
                                        const GrowthRateOptions& opts = {});

/// One-dimensional (omega = 0) residual in the closed form printed as
///   F = zeta + 4 beta^2 / (alpha ((1-theta)(1-alpha) + zeta + eta)(eta + alpha zeta)) - 1
/// with zeta = sqrt((1-theta)^2 + 4 beta^2 lam / alpha) and
/// eta = sqrt((2 theta + alpha (1-theta))^2 + 4 beta^2 lam).
/// Note the factor (eta + alpha zeta): it equals mu+ - s- (times 2 beta) only at
/// lam = 0 or alpha = 1, so F and dispersion_residual(omega=0) differ elsewhere.
double case1_residual_F(double alpha, double theta, double lam);

/// Growth rate in the long-wave small-alpha limit with omega = omega0 / sqrt(alpha).
double case2_lambda(double theta, double omega0);

}  // namespace frontstab
