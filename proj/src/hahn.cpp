#include "dcmom/hahn.hpp"

#include <string>

#include "dcmom/errors.hpp"

namespace dcmom {

namespace {

// Terms with index j > x vanish when x is a nonnegative integer, so the
// series needs only min(m, x)+1 of them.
int termination_index(const HahnSpec& spec) {
  if (spec.x.is_integer() && spec.x >= 0L && spec.x < static_cast<long>(spec.m))
    return static_cast<int>(spec.x.to_long());
  return spec.m;
}

}  // namespace

Real hahn_series(const HahnSpec& spec, const PrecisionCtx& ctx) {
  if (spec.m < 0) throw OutOfRange("hahn degree must be nonnegative");
  const int bits = ctx.bits;
  const Real alpha = spec.alpha.rounded_to(bits);
  const Real beta = spec.beta_w.rounded_to(bits);
  const Real x = spec.x.rounded_to(bits);
  const Real N = spec.N.rounded_to(bits);
  const long m = spec.m;

  // prefactor (1-N)_m (beta+1)_m / m!
  Real pre = Real::of(1L, bits);
  for (long j = 0; j < m; ++j) {
    pre = pre * ((1L - N + j) * (beta + (j + 1))) / (j + 1);
  }

  const int jmax = termination_index(spec);
  Real sum = Real::of(1L, bits);
  Real term = Real::of(1L, bits);
  for (long j = 0; j < jmax; ++j) {
    Real d1 = beta + (j + 1);
    Real d2 = 1L - N + j;
    if (d1.is_zero() || d2.is_zero())
      throw DegenerateDenominator("Pochhammer denominator vanished at series index " +
                                  std::to_string(j));
    term = term * ((j - m) * (alpha + beta + (m + 1 + j)) * (j - x)) / (d1 * d2 * (j + 1));
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return pre * sum;
}

RecurrenceCoeffs coeffs(const HahnSpec& spec, const PrecisionCtx& ctx) {
  const int bits = ctx.bits;
  const Real alpha = spec.alpha.rounded_to(bits);
  const Real beta = spec.beta_w.rounded_to(bits);
  const Real N = spec.N.rounded_to(bits);
  const long m = spec.m;
  const Real ab = alpha + beta;

  Real d0 = ab + 2 * m;
  Real d1 = ab + (2 * m + 1);
  Real d2 = ab + (2 * m + 2);
  if (d1.is_zero() || d2.is_zero())
    throw DegenerateDenominator("recurrence denominator vanished at degree " + std::to_string(m));

  Real alpha_m = ((m + 1) * (ab + (m + 1))) / (d1 * d2);
  if (alpha_m.is_zero())
    throw DegenerateDenominator("alpha_m = 0 at degree " + std::to_string(m));

  Real beta_m = (alpha - beta + 2L * N - 2L) / 4L;
  Real num2 = (beta * beta - alpha * alpha) * (ab + 2L * N);
  if (!num2.is_zero()) {
    if (d0.is_zero())
      throw DegenerateDenominator("recurrence denominator vanished at degree " +
                                  std::to_string(m));
    beta_m = beta_m + num2 / (4L * d0 * d2);
  }

  Real gnum = (alpha + m) * (beta + m) * (ab + N + m) * (N - m);
  Real gamma_m(static_cast<mpfr_prec_t>(bits));
  if (gnum.is_zero()) {
    gamma_m = Real::of(0L, bits);
  } else {
    if (d0.is_zero())
      throw DegenerateDenominator("recurrence denominator vanished at degree " +
                                  std::to_string(m));
    gamma_m = gnum / (d0 * d1);
  }
  return RecurrenceCoeffs{std::move(alpha_m), std::move(beta_m), std::move(gamma_m)};
}

Real hahn_recurrence(const HahnSpec& spec, const PrecisionCtx& ctx) {
  if (spec.m < 0) throw OutOfRange("hahn degree must be nonnegative");
  const int bits = ctx.bits;
  const Real x = spec.x.rounded_to(bits);
  Real prev = Real::of(0L, bits);  // h_{-1}
  Real cur = Real::of(1L, bits);   // h_0
  for (int k = 0; k < spec.m; ++k) {
    HahnSpec at_k = spec;
    at_k.m = k;
    RecurrenceCoeffs c = coeffs(at_k, ctx);
    Real next = ((x - c.beta_m) * cur - c.gamma_m * prev) / c.alpha_m;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Real chebyshev_t(int m, const Real& x, const Real& N, const PrecisionCtx& ctx) {
  Real zero = Real::of(0L, ctx.bits);
  return hahn_series(HahnSpec{zero, zero, m, x, N}, ctx);
}

}  // namespace dcmom
