#include "frontstab/wave.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "frontstab/errors.hpp"

namespace frontstab {

void validate(const ModelParams& p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
    std::ostringstream msg;
    msg << "alpha must be positive and finite, got " << p.alpha;
    throw DomainError(msg.str());
  }
  if (!(p.theta > 0.0 && p.theta < 1.0)) {
    std::ostringstream msg;
    msg << "theta must lie in (0,1), got " << p.theta;
    throw DomainError(msg.str());
  }
}

WaveConstants wave_constants(const ModelParams& p) {
  validate(p);
  const double a = p.alpha;
  const double t = p.theta;
  WaveConstants c;
  c.sigma = (1.0 - t) * std::sqrt(a / (t * t + a * t * (1.0 - t)));
  c.beta = std::sqrt(a * t) * std::sqrt(t + a * (1.0 - t));
  c.lambda_decay = t / c.beta;
  c.b = t / (t + a * (1.0 - t));
  return c;
}

namespace {

// Exponents of the three tails: left (shared by u0 and v0), right u0, right v0.
struct TailRates {
  double left;
  double right_u;
  double right_v;
};

TailRates tail_rates(const ModelParams& p, const WaveConstants& c) {
  return {p.theta / c.beta, (1.0 - p.theta) / c.beta,
          p.alpha * (1.0 - p.theta) / c.beta};
}

}  // namespace

WaveProfileSample eval_profile(const ModelParams& p, double x) {
  const WaveConstants c = wave_constants(p);
  const TailRates k = tail_rates(p, c);
  const double t = p.theta;
  WaveProfileSample s{x, 0.0, 0.0};
  if (x < 0.0) {
    const double e = std::exp(k.left * x);
    s.u0 = 1.0 - (1.0 - t) * e;
    s.v0 = (1.0 - c.b) * e;
  } else {
    s.u0 = t * std::exp(-k.right_u * x);
    s.v0 = 1.0 - c.b * std::exp(-k.right_v * x);
  }
  return s;
}

std::pair<double, double> eval_profile_derivative(const ModelParams& p, double x) {
  const WaveConstants c = wave_constants(p);
  const TailRates k = tail_rates(p, c);
  const double t = p.theta;
  if (x < 0.0) {
    const double e = std::exp(k.left * x);
    return {-(1.0 - t) * k.left * e, (1.0 - c.b) * k.left * e};
  }
  return {-t * k.right_u * std::exp(-k.right_u * x),
          c.b * k.right_v * std::exp(-k.right_v * x)};
}

std::pair<double, double> eval_profile_second_derivative(const ModelParams& p, double x) {
  const WaveConstants c = wave_constants(p);
  const TailRates k = tail_rates(p, c);
  const double t = p.theta;
  if (x < 0.0) {
    const double e = std::exp(k.left * x);
    return {-(1.0 - t) * k.left * k.left * e, (1.0 - c.b) * k.left * k.left * e};
  }
  return {t * k.right_u * k.right_u * std::exp(-k.right_u * x),
          -c.b * k.right_v * k.right_v * std::exp(-k.right_v * x)};
}

ProfileResidual profile_residual(const ModelParams& p, double h, double x_min, double x_max) {
  const WaveConstants c = wave_constants(p);
  if (!(h > 0.0)) throw DomainError("profile_residual: grid spacing must be positive");
  const auto k_lo = static_cast<long long>(std::ceil(x_min / h));
  const auto k_hi = static_cast<long long>(std::floor(x_max / h));
  const double inv_alpha = 1.0 / p.alpha;

  ProfileResidual r;
  for (long long k = k_lo; k <= k_hi; ++k) {
    if (k > -2 && k < 2) continue;
    const double x = static_cast<double>(k) * h;
    const auto m = eval_profile(p, x - h);
    const auto z = eval_profile(p, x);
    const auto q = eval_profile(p, x + h);
    const double du = (q.u0 - m.u0) / (2.0 * h);
    const double dv = (q.v0 - m.v0) / (2.0 * h);
    const double ddu = (q.u0 - 2.0 * z.u0 + m.u0) / (h * h);
    const double ddv = (q.v0 - 2.0 * z.v0 + m.v0) / (h * h);
    const double reaction = inv_alpha * ignition(z.u0, p.theta) * z.v0;
    const double ru = -c.sigma * du - p.alpha * ddu - reaction;
    const double rv = -c.sigma * dv - ddv + reaction;
    r.max_residual_u = std::max(r.max_residual_u, std::abs(ru));
    r.max_residual_v = std::max(r.max_residual_v, std::abs(rv));
    ++r.samples;
  }
  if (r.samples == 0) throw DomainError("profile_residual: grid has no points outside |x| < 2h");
  return r;
}

ProfileResidual profile_residual(const ModelParams& p, double h) {
  const WaveConstants c = wave_constants(p);
  const TailRates k = tail_rates(p, c);
  const double right = 30.0 / std::min(k.right_u, k.right_v);
  return profile_residual(p, h, -30.0 / k.left, right);
}

double derivative_jump_check(const ModelParams& p) {
  const WaveConstants c = wave_constants(p);
  const TailRates k = tail_rates(p, c);
  const double t = p.theta;
  const double slope_left = -(1.0 - t) * k.left;   // u0'(0-)
  const double slope_right = -t * k.right_u;       // u0'(0+)

  const double lhs = c.sigma * t / p.alpha;
  const double rhs = c.lambda_decay * (1.0 - t);
  if (std::abs(lhs - rhs) > 64.0 * std::numeric_limits<double>::epsilon() * std::abs(rhs)) {
    std::ostringstream msg;
    msg << "derivative matching identity violated: sigma*theta/alpha=" << lhs
        << " lambda_decay*(1-theta)=" << rhs;
    throw DomainError(msg.str());
  }
  return std::abs(slope_right - slope_left);
}

double front_width(const ModelParams& p) {
  const WaveConstants c = wave_constants(p);
  const TailRates k = tail_rates(p, c);
  const double t = p.theta;
  auto position_of = [&](double level) {
    if (level > t) return std::log((1.0 - level) / (1.0 - t)) / k.left;
    return -std::log(level / t) / k.right_u;
  };
  return position_of(0.1) - position_of(0.9);
}

}  // namespace frontstab
