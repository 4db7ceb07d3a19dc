#pragma once

#include <utility>

#include "frontstab/dispersion.hpp"
#include "frontstab/model.hpp"

namespace frontstab {

/// Piecewise-exponential transversal eigenmode (u1, v1), normalized A = 1:
///   x > 0:  u1 = A e^{r- x},                  v1 = B e^{s- x}
///   x < 0:  u1 = C e^{r+ x} + gamma B e^{mu+ x}, v1 = B e^{mu+ x}
struct Eigenmode {
  ModelParams params;
  double omega = 0.0;
  double growth_rate = 0.0;
  SpectralRoots roots;
  double A = 1.0;
  double B = 0.0;
  double C = 0.0;
  double gamma = 0.0;

  /// (u1, v1) at x; the right branch is used at x = 0.
  std::pair<double, double> operator()(double x) const;
  /// (u1', v1') at x; one-sided from the right at x = 0.
  std::pair<double, double> derivative(double x) const;
  /// (u1', v1') at 0 from the left branch.
  std::pair<double, double> derivative_left_of_zero() const;
};

/// Throws NotOnManifoldError if |dispersion_residual| >= tol_res at (omega, lam),
/// DegenerateError if s- = mu+.
Eigenmode eigenmode(const ModelParams& p, double omega, double lam, double tol_res = 1e-12);

}  // namespace frontstab
