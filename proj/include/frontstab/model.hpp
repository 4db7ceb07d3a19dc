#pragma once

namespace frontstab {

/// Parameters of the two-species ignition system
///   u_t - alpha * Lap(u) =  h(u) v / alpha
///   v_t -         Lap(v) = -h(u) v / alpha
/// with the step nonlinearity h(u) = 1 for u > theta, 0 otherwise.
struct ModelParams {
  double alpha = 0.0;  // Lewis-number-like diffusivity ratio, > 0
  double theta = 0.0;  // ignition threshold, in (0, 1)
};

/// Throws DomainError unless alpha > 0 and 0 < theta < 1.
void validate(const ModelParams& p);

/// Step nonlinearity. Strict inequality: h(theta) = 0.
inline double ignition(double u, double theta) { return u > theta ? 1.0 : 0.0; }

}  // namespace frontstab
