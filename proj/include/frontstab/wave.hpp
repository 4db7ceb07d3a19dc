#pragma once

#include <utility>

#include "frontstab/model.hpp"

namespace frontstab {

/// Scalars fixing the unique monotone traveling wave.
struct WaveConstants {
  double sigma = 0.0;         // wave speed
  double beta = 0.0;          // sqrt(alpha*theta) * sqrt(theta + alpha*(1-theta))
  double lambda_decay = 0.0;  // left-tail exponent of u0 and v0, theta / beta
  double b = 0.0;             // right-tail amplitude of v0
};

struct WaveProfileSample {
  double x = 0.0;
  double u0 = 0.0;
  double v0 = 0.0;
};

WaveConstants wave_constants(const ModelParams& p);

/// Closed-form wave in the co-moving frame, normalized so that u0(0) = theta.
/// Left branch for x < 0, right branch for x >= 0.
WaveProfileSample eval_profile(const ModelParams& p, double x);

/// Analytic first derivatives (u0', v0') at x. At x = 0 the right branch is used;
/// both branches agree there.
std::pair<double, double> eval_profile_derivative(const ModelParams& p, double x);

/// Analytic second derivatives (u0'', v0''). Discontinuous at 0; right branch at 0.
std::pair<double, double> eval_profile_second_derivative(const ModelParams& p, double x);

struct ProfileResidual {
  double max_residual_u = 0.0;
  double max_residual_v = 0.0;
  int samples = 0;
};

/// Max-norm residual of the traveling-wave ODEs
///   -sigma u' - alpha u'' - h(u0) v0 / alpha
///   -sigma v' -       v'' + h(u0) v0 / alpha
/// using second-order centered differences with spacing h on the grid
/// {k*h : x_min <= k*h <= x_max, |k*h| >= 2h}. Throws DomainError on h <= 0
/// or an empty grid.
ProfileResidual profile_residual(const ModelParams& p, double h, double x_min, double x_max);

/// Same, on a window wide enough to contain every tail down to e^-30.
ProfileResidual profile_residual(const ModelParams& p, double h);

/// |u0'(0+) - u0'(0-)| from the two analytic branches. Throws DomainError if
/// the matching identity sigma*theta/alpha = lambda_decay*(1-theta) is violated
/// beyond rounding.
double derivative_jump_check(const ModelParams& p);

/// Distance between the points where u0 = 0.9 and u0 = 0.1.
double front_width(const ModelParams& p);

}  // namespace frontstab
