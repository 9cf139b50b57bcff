#pragma once

#include <stdexcept>
#include <string>

namespace dcmom {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quantum numbers violate the bound-state constraints (mu >= |kappa|,
// n_r = 0 with kappa > 0, nonpositive scale, ...).
struct InvalidState : Error {
  using Error::Error;
};

// Requested power/index outside the validity range of a formula.
struct OutOfRange : Error {
  using Error::Error;
};

// A Pochhammer or recurrence denominator vanished before the series
// terminated, or a two-term downward step hit 4*nu^2 = p^2.
struct DegenerateDenominator : Error {
  using Error::Error;
};

// alpha_p + beta_p = 0 when combining two recurrence operators.
struct DegenerateCombination : Error {
  using Error::Error;
};

// The requested moment integral does not converge at the origin
// (power below -1 - 2*nu).
struct DivergentIntegral : Error {
  using Error::Error;
};

// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureNonConvergence : Error {
  using Error::Error;
};

// A matrix required for a factorization step is numerically singular.
struct SingularMatrix : Error {
  using Error::Error;
};

// An algebraic identity that must hold exactly failed beyond tolerance.
// Carries the offending relative residual (as a decimal string).
struct IdentityViolation : Error {
  explicit IdentityViolation(const std::string& what, std::string residual = {})
      : Error(what), residual_str(std::move(residual)) {}
  std::string residual_str;
};

}  // namespace dcmom
