#pragma once

#include "dcmom/real.hpp"

namespace dcmom {

// Derived spectral quantities of a bound Dirac-Coulomb state:
//   nu  = sqrt(kappa^2 - mu^2)        (apparent angular momentum)
//   eps = (n_r + nu) / sqrt((n_r + nu)^2 + mu^2)   (E / mc^2)
//   a   = sqrt(1 - eps^2)             (decay parameter, in units of beta)
// They satisfy nu^2 + mu^2 = kappa^2, a^2 + eps^2 = 1, a (n_r + nu) = mu eps.
struct Spectral {
  Real nu;
  Real eps;
  Real a;
};

// Bound-state quantum numbers of a hydrogenlike Dirac ion plus the physical
// length scale beta = mc/hbar. Immutable after construction; the factory
// validates 0 < mu < |kappa|, n_r >= 0, and that n_r = 0 requires kappa < 0.
class DiracState {
 public:
  static DiracState make(int n_r, int kappa, Real mu, Real beta_scale, const PrecisionCtx& ctx);
  static DiracState make(int n_r, int kappa, Real mu, const PrecisionCtx& ctx);
  // mu = Z * alpha_fsc.
  static DiracState from_charge(int n_r, int kappa, const Real& Z, const Real& alpha_fsc,
                                Real beta_scale, const PrecisionCtx& ctx);

  int n_r() const { return n_r_; }
  int kappa() const { return kappa_; }
  const Real& mu() const { return mu_; }
  const Real& beta_scale() const { return beta_; }

 private:
  DiracState(int n_r, int kappa, Real mu, Real beta)
      : n_r_(n_r), kappa_(kappa), mu_(std::move(mu)), beta_(std::move(beta)) {}
  int n_r_;
  int kappa_;
  Real mu_;
  Real beta_;
};

// CODATA 2018 fine-structure constant, used when states are built from Z.
inline constexpr const char* kDefaultAlphaFsc = "7.2973525693e-3";

Spectral derive_parameters(const DiracState& state, const PrecisionCtx& ctx);

// True iff the moment integrals at power p converge at the origin,
// i.e. p > -1 - 2 nu.
bool validate_power_range(const DiracState& state, int p, const PrecisionCtx& ctx);

// Nonrelativistic hydrogenic bound state (n, l) with charge Z and Bohr
// radius a0. The factory validates 0 <= l <= n-1, Z > 0, a0 > 0.
class NonrelState {
 public:
  static NonrelState make(int n, int l, Real Z, Real a0, const PrecisionCtx& ctx);
  static NonrelState make(int n, int l, const PrecisionCtx& ctx);

  int n() const { return n_; }
  int l() const { return l_; }
  const Real& Z() const { return Z_; }
  const Real& a0() const { return a0_; }

 private:
  NonrelState(int n, int l, Real Z, Real a0)
      : n_(n), l_(l), Z_(std::move(Z)), a0_(std::move(a0)) {}
  int n_;
  int l_;
  Real Z_;
  Real a0_;
};

}  // namespace dcmom
