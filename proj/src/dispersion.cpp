#include "frontstab/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frontstab/errors.hpp"
#include "frontstab/roots.hpp"
#include "frontstab/wave.hpp"

namespace frontstab {

namespace {

void check_omega(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    std::ostringstream msg;
    msg << "omega must be finite and nonnegative, got " << omega;
    throw DomainError(msg.str());
  }
}

// Radicands may come out a few ulps negative exactly at the floor.
double clamp_radicand(double r, double scale) {
  if (r < 0.0 && r > -1e-13 * scale) return 0.0;
  return r;
}

}  // namespace

double lambda_floor(const ModelParams& p, double omega) {
  const WaveConstants c = wave_constants(p);
  check_omega(omega);
  const double a = p.alpha;
  const double t = p.theta;
  const double w2 = omega * omega;
  const double b2x4 = 4.0 * c.beta * c.beta;
  const double from_r = -a * (w2 + (1.0 - t) * (1.0 - t) / b2x4);
  const double from_s = -w2 - (1.0 - t) * (1.0 - t) * a * a / b2x4;
  const double from_mu = -w2 - (2.0 * t + a * (1.0 - t)) * (2.0 * t + a * (1.0 - t)) / b2x4;
  return std::max({from_r, from_s, from_mu});
}

SpectralRoots spectral_roots(const SpectralQuery& q) {
  const ModelParams& p = q.params;
  const WaveConstants c = wave_constants(p);
  check_omega(q.omega);
  const double floor = lambda_floor(p, q.omega);
  if (!(q.growth_rate >= floor)) {
    std::ostringstream msg;
    msg << "growth rate " << q.growth_rate << " below admissible floor " << floor
        << " (alpha=" << p.alpha << ", theta=" << p.theta << ", omega=" << q.omega << ")";
    throw AdmissibilityError(msg.str());
  }

  const double a = p.alpha;
  const double t = p.theta;
  const double beta = c.beta;
  const double lam = q.growth_rate;
  const double w2 = q.omega * q.omega;
  const double b2x4 = 4.0 * beta * beta;

  const double one_t = 1.0 - t;
  const double rad_r_scale = one_t * one_t + b2x4 * (w2 + std::abs(lam) / a);
  const double rad_s_scale = one_t * one_t * a * a + b2x4 * (w2 + std::abs(lam));
  const double mu_base = 2.0 * t + a * one_t;
  const double rad_mu_scale = mu_base * mu_base + b2x4 * (w2 + std::abs(lam));

  const double rad_r = clamp_radicand(one_t * one_t + b2x4 * (w2 + lam / a), rad_r_scale);
  const double rad_s = clamp_radicand(one_t * one_t * a * a + b2x4 * (w2 + lam), rad_s_scale);
  const double rad_mu = clamp_radicand(mu_base * mu_base + b2x4 * (w2 + lam), rad_mu_scale);

  SpectralRoots r;
  const double sq_r = std::sqrt(rad_r);
  r.r_plus = (-one_t + sq_r) / (2.0 * beta);
  r.r_minus = (-one_t - sq_r) / (2.0 * beta);
  r.s_minus = (-one_t * a - std::sqrt(rad_s)) / (2.0 * beta);
  r.mu_plus = (-one_t * a + std::sqrt(rad_mu)) / (2.0 * beta);

  const double denom = a * a * (r.mu_plus - r.r_plus) * (r.mu_plus - r.r_minus);
  if (denom == 0.0) {
    throw DegenerateError("spectral_roots: mu+ coincides with r+ or r-; gamma undefined");
  }
  r.gamma = -1.0 / denom;
  return r;
}

double dispersion_residual(const SpectralQuery& q) {
  const SpectralRoots r = spectral_roots(q);
  const double beta = wave_constants(q.params).beta;
  const double d1 = r.mu_plus - r.r_minus;
  const double d2 = r.mu_plus - r.s_minus;
  if (d1 == 0.0 || d2 == 0.0) {
    std::ostringstream msg;
    msg << "dispersion_residual: degenerate denominator at omega=" << q.omega
        << " growth_rate=" << q.growth_rate << " (mu+ - r- = " << d1 << ", mu+ - s- = " << d2
        << ")";
    throw DegenerateError(msg.str());
  }
  return beta * (r.r_plus - r.r_minus) + 1.0 / (q.params.alpha * d1 * d2) - 1.0;
}

GrowthRateScan solve_growth_rate_detailed(const ModelParams& p, double omega, double search_max,
                                          const GrowthRateOptions& opts) {
  validate(p);
  check_omega(omega);
  if (!(search_max > 0.0)) throw DomainError("solve_growth_rate: search_max must be positive");

  const double lo = lambda_floor(p, omega) + opts.floor_offset;
  auto residual = [&](double lam) { return dispersion_residual({p, omega, lam}); };
  const BisectionTolerances tol{opts.tol_res, opts.tol_lam, 400};
  RootScan scan = scan_roots(residual, lo, search_max, opts.scan_subintervals, tol);

  GrowthRateScan out;
  out.warnings = std::move(scan.warnings);
  for (const auto& root : scan.roots) {
    out.roots.push_back(root.root);
    const bool trivial = omega == 0.0 && std::abs(root.root) < 10.0 * opts.tol_lam;
    if (trivial) continue;
    if (!out.growth_rate || root.root > *out.growth_rate) out.growth_rate = root.root;
  }
  return out;
}

std::optional<double> solve_growth_rate(const ModelParams& p, double omega, double search_max,
                                        const GrowthRateOptions& opts) {
  return solve_growth_rate_detailed(p, omega, search_max, opts).growth_rate;
}

double case1_residual_F(double alpha, double theta, double lam) {
  const ModelParams p{alpha, theta};
  const WaveConstants c = wave_constants(p);
  const double b2x4 = 4.0 * c.beta * c.beta;
  const double one_t = 1.0 - theta;
  const double rad_zeta = one_t * one_t + b2x4 * lam / alpha;
  const double eta_base = 2.0 * theta + alpha * one_t;
  const double rad_eta = eta_base * eta_base + b2x4 * lam;
  if (rad_zeta < 0.0 || rad_eta < 0.0) {
    std::ostringstream msg;
    msg << "case1_residual_F: negative radicand at alpha=" << alpha << " theta=" << theta
        << " lam=" << lam;
    throw AdmissibilityError(msg.str());
  }
  const double zeta = std::sqrt(rad_zeta);
  const double eta = std::sqrt(rad_eta);
  const double denom = alpha * (one_t * (1.0 - alpha) + zeta + eta) * (eta + alpha * zeta);
  if (denom == 0.0) throw DegenerateError("case1_residual_F: zero denominator");
  return zeta + b2x4 / denom - 1.0;
}

double case2_lambda(double theta, double omega0) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("case2_lambda: theta must lie in (0,1)");
  check_omega(omega0);
  // Exact translation mode; the closed form only cancels to rounding here.
  if (omega0 == 0.0) return 0.0;
  const double q = theta - 2.0 * theta * std::sqrt(omega0 * omega0 + 1.0);
  const double bracket = q + std::sqrt(q * q + 4.0 - 4.0 * theta + 8.0 * theta * omega0);
  const double shift = (1.0 - theta) / (2.0 * theta);
  return -omega0 * omega0 + bracket * bracket / (16.0 * theta * theta) - shift * shift;
}

}  // namespace frontstab
