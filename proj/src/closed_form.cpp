#include "dcmom/closed_form.hpp"

#include <utility>
#include <vector>

#include "dcmom/errors.hpp"
#include "dcmom/hahn.hpp"

namespace dcmom {

namespace {

// Bits of significance lost to cancellation when the terms were summed.
long bits_lost(const std::vector<Real>& terms, const Real& sum) {
  long top = 0;
  bool any = false;
  for (const Real& t : terms) {
    if (t.is_zero() || !t.is_finite()) continue;
    top = any ? std::max(top, t.exponent2()) : t.exponent2();
    any = true;
  }
  if (!any) return 0;
  if (sum.is_zero()) return 1L << 30;
  return std::max(0L, top - sum.exponent2());
}

struct TripleEval {
  MomentTriple triple;
  long lost;
};

TripleEval eval_hahn(const DiracState& state, int p, const PrecisionCtx& ctx) {
  const int bits = ctx.bits;
  const Spectral sp = derive_parameters(state, ctx);
  const Real mu = state.mu().rounded_to(bits);
  const Real kap = Real::of(static_cast<long>(state.kappa()), bits);
  const Real zero = Real::of(0L, bits);
  const Real one = Real::of(1L, bits);
  const Real n = Real::of(static_cast<long>(state.n_r()), bits);

  const Real N1 = -1L - 2L * sp.nu;
  const Real N3 = 1L - 2L * sp.nu;
  const Real h1 = hahn_series(HahnSpec{zero, zero, p + 1, n - 1L, N1}, ctx);
  const Real h2 = hahn_series(HahnSpec{one, one, p, n - 1L, N1}, ctx);
  const Real h3 = hahn_series(HahnSpec{zero, zero, p + 1, n, N3}, ctx);

  const Real ekn_p = sp.eps * kap + sp.nu;
  const Real ekn_m = sp.eps * kap - sp.nu;
  const Real q = ekn_p * ekn_m;  // eps^2 kappa^2 - nu^2
  const Real mid = Real::of(2L * (p + 2), bits) / (p + 1);
  const Real scale = pow_int(2L * sp.a * state.beta_scale(), p);

  std::vector<Real> ta{sp.a * kap * ekn_p * h1, -(mid * mu * q * h2), sp.a * kap * ekn_m * h3};
  Real anum = ta[0] + ta[1] + ta[2];
  std::vector<Real> tb{sp.a * ekn_p * h1, -(sp.a * ekn_m * h3)};
  Real bnum = tb[0] + tb[1];
  std::vector<Real> tc{sp.a * mu * ekn_p * h1, -(mid * kap * q * h2), sp.a * mu * ekn_m * h3};
  Real cnum = tc[0] + tc[1] + tc[2];

  long lost = std::max({bits_lost(ta, anum), bits_lost(tb, bnum), bits_lost(tc, cnum)});

  Real nu2 = sp.nu * sp.nu;
  MomentTriple t{p, anum / (4L * mu * nu2 * scale), bnum / (4L * mu * sp.nu * scale),
                 cnum / (8L * mu * nu2 * scale), Route::hahn_form};
  return TripleEval{std::move(t), lost};
}

TripleEval eval_chebyshev(const DiracState& state, int p, const PrecisionCtx& ctx) {
  const int bits = ctx.bits;
  const Spectral sp = derive_parameters(state, ctx);
  const Real mu = state.mu().rounded_to(bits);
  const Real kap = Real::of(static_cast<long>(state.kappa()), bits);
  const Real zero = Real::of(0L, bits);
  const Real one = Real::of(1L, bits);
  const Real n = Real::of(static_cast<long>(state.n_r()), bits);

  const Real N0 = -2L * sp.nu;
  const Real N1 = -1L - 2L * sp.nu;
  const Real g1 = hahn_series(HahnSpec{zero, zero, p, n - 1L, N0}, ctx);
  const Real g2 = hahn_series(HahnSpec{one, one, p - 1, n - 1L, N1}, ctx);
  const Real g3 = hahn_series(HahnSpec{zero, zero, p, n, N0}, ctx);

  const Real w_p = mu + sp.a * kap;
  const Real w_m = mu - sp.a * kap;
  const Real q2 = w_p * w_m;  // mu^2 - a^2 kappa^2
  const Real scale = pow_int(2L * sp.a * state.beta_scale(), p);

  std::vector<Real> ta{sp.a * w_p * g1, 2L * sp.eps * q2 * g2, sp.a * w_m * g3};
  Real anum = ta[0] + ta[1] + ta[2];
  std::vector<Real> tb{sp.a * sp.eps * w_p * g1, 2L * q2 * g2, sp.a * sp.eps * w_m * g3};
  Real bnum = tb[0] + tb[1] + tb[2];
  std::vector<Real> tc{sp.a * w_p * g1, -(sp.a * w_m * g3)};
  Real cnum = tc[0] + tc[1];

  long lost = std::max({bits_lost(ta, anum), bits_lost(tb, bnum), bits_lost(tc, cnum)});

  Real den = 2L * sp.a * mu * scale;
  MomentTriple t{p, anum / den, bnum / den, cnum / (4L * mu * scale), Route::chebyshev_form};
  return TripleEval{std::move(t), lost};
}

MomentTriple rounded(MomentTriple t, int bits) {
  t.A = t.A.rounded_to(bits);
  t.B = t.B.rounded_to(bits);
  t.C = t.C.rounded_to(bits);
  return t;
}

}  // namespace

MomentTriple triple_hahn(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p < 0) throw OutOfRange("hahn closed form requires p >= 0");
  TripleEval e = eval_hahn(state, p, ctx);
  if (e.lost > ctx.bits / 2) e = eval_hahn(state, p, ctx.doubled());
  return rounded(std::move(e.triple), ctx.bits);
}

MomentTriple triple_chebyshev(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p < 1) throw OutOfRange("chebyshev closed form requires p >= 1");
  TripleEval e = eval_chebyshev(state, p, ctx);
  if (e.lost > ctx.bits / 2) e = eval_chebyshev(state, p, ctx.doubled());
  return rounded(std::move(e.triple), ctx.bits);
}

}  // namespace dcmom
