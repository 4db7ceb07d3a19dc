#include "frontstab/eigenmode.hpp"

#include <cmath>
#include <sstream>

#include "frontstab/errors.hpp"
#include "frontstab/wave.hpp"

namespace frontstab {

Eigenmode eigenmode(const ModelParams& p, double omega, double lam, double tol_res) {
  const SpectralQuery q{p, omega, lam};
  const double g = dispersion_residual(q);
  if (!(std::abs(g) < tol_res)) {
    std::ostringstream msg;
    msg << "eigenmode: (omega=" << omega << ", lambda=" << lam
        << ") is not on the dispersion manifold, |G| = " << std::abs(g);
    throw NotOnManifoldError(msg.str());
  }
  const double beta = wave_constants(p).beta;

  Eigenmode m;
  m.params = p;
  m.omega = omega;
  m.growth_rate = lam;
  m.roots = spectral_roots(q);
  m.gamma = m.roots.gamma;
  const double gap = m.roots.s_minus - m.roots.mu_plus;
  if (gap == 0.0) throw DegenerateError("eigenmode: s- coincides with mu+");
  m.A = 1.0;
  m.B = (p.alpha / beta) * m.A / gap;
  m.C = m.A - m.gamma * m.B;
  return m;
}

std::pair<double, double> Eigenmode::operator()(double x) const {
  if (x >= 0.0) return {A * std::exp(roots.r_minus * x), B * std::exp(roots.s_minus * x)};
  const double ev = std::exp(roots.mu_plus * x);
  return {C * std::exp(roots.r_plus * x) + gamma * B * ev, B * ev};
}

std::pair<double, double> Eigenmode::derivative(double x) const {
  if (x >= 0.0) {
    return {A * roots.r_minus * std::exp(roots.r_minus * x),
            B * roots.s_minus * std::exp(roots.s_minus * x)};
  }
  const double ev = std::exp(roots.mu_plus * x);
  return {C * roots.r_plus * std::exp(roots.r_plus * x) + gamma * B * roots.mu_plus * ev,
          B * roots.mu_plus * ev};
}

std::pair<double, double> Eigenmode::derivative_left_of_zero() const {
  return {C * roots.r_plus + gamma * B * roots.mu_plus, B * roots.mu_plus};
}

}  // namespace frontstab
