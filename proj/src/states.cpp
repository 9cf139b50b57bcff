#include "dcmom/states.hpp"

#include <cstdlib>
#include <string>

#include "dcmom/errors.hpp"

namespace dcmom {

DiracState DiracState::make(int n_r, int kappa, Real mu, Real beta_scale,
                            const PrecisionCtx& ctx) {
  if (kappa == 0) throw InvalidState("kappa must be a nonzero integer");
  if (n_r < 0) throw InvalidState("n_r must be nonnegative");
  if (n_r == 0 && kappa > 0)
    throw InvalidState("no n_r = 0 state exists for kappa > 0");
  Real m = mu.rounded_to(ctx.bits);
  if (!m.is_finite() || !(m > 0L))
    throw InvalidState("mu must be positive");
  if (!(m < Real::of(std::abs(static_cast<long>(kappa)), ctx.bits)))
    throw InvalidState("mu must satisfy mu < |kappa| (got mu = " + m.str(8) + ")");
  Real b = beta_scale.rounded_to(ctx.bits);
  if (!b.is_finite() || !(b > 0L)) throw InvalidState("beta_scale must be positive");
  return DiracState(n_r, kappa, std::move(m), std::move(b));
}

DiracState DiracState::make(int n_r, int kappa, Real mu, const PrecisionCtx& ctx) {
  return make(n_r, kappa, std::move(mu), Real::of(1L, ctx.bits), ctx);
}

DiracState DiracState::from_charge(int n_r, int kappa, const Real& Z, const Real& alpha_fsc,
                                   Real beta_scale, const PrecisionCtx& ctx) {
  if (!(Z > 0L)) throw InvalidState("Z must be positive");
  if (!(alpha_fsc > 0L)) throw InvalidState("alpha_fsc must be positive");
  return make(n_r, kappa, Z.rounded_to(ctx.bits) * alpha_fsc.rounded_to(ctx.bits),
              std::move(beta_scale), ctx);
}

Spectral derive_parameters(const DiracState& state, const PrecisionCtx& ctx) {
  const Real mu = state.mu().rounded_to(ctx.bits);
  const Real kap = Real::of(static_cast<long>(state.kappa()), ctx.bits);
  Real nu = sqrt(kap * kap - mu * mu);
  Real s = nu + static_cast<long>(state.n_r());
  Real eps = s / sqrt(s * s + mu * mu);
  Real a = sqrt((1L - eps) * (1L + eps));
  return Spectral{std::move(nu), std::move(eps), std::move(a)};
}

bool validate_power_range(const DiracState& state, int p, const PrecisionCtx& ctx) {
  Spectral sp = derive_parameters(state, ctx);
  // p > -1 - 2 nu  <=>  2 nu + p + 1 > 0
  return 2L * sp.nu + static_cast<long>(p + 1) > 0L;
}

NonrelState NonrelState::make(int n, int l, Real Z, Real a0, const PrecisionCtx& ctx) {
  if (n < 1) throw InvalidState("n must be a positive integer");
  if (l < 0 || l > n - 1) throw InvalidState("l must satisfy 0 <= l <= n-1");
  Real z = Z.rounded_to(ctx.bits);
  if (!(z > 0L)) throw InvalidState("Z must be positive");
  Real a = a0.rounded_to(ctx.bits);
  if (!(a > 0L)) throw InvalidState("a0 must be positive");
  return NonrelState(n, l, std::move(z), std::move(a));
}

NonrelState NonrelState::make(int n, int l, const PrecisionCtx& ctx) {
  return make(n, l, Real::of(1L, ctx.bits), Real::of(1L, ctx.bits), ctx);
}

}  // namespace dcmom
