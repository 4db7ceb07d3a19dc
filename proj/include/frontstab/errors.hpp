#pragma once

#include <stdexcept>
#include <string>

namespace frontstab {

// Parameters outside the model's domain (alpha <= 0, theta not in (0,1), ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Spectral query below lambda_floor: some exponent would be complex.
class AdmissibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Zero denominator in the dispersion relation or the eigenmode amplitudes.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Eigenmode requested at a point that does not satisfy the dispersion relation.
class NotOnManifoldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Linear solve did not reach the requested residual.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// u never crosses theta along the propagation axis.
class NoCrossingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tracked mode amplitude fell below the measurable floor.
class AmplitudeUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent simulation config.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frontstab
