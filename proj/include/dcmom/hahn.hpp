#pragma once

#include "dcmom/real.hpp"

namespace dcmom {

// Parameters of one Hahn polynomial evaluation h_m^{(alpha,beta)}(x, N).
// The lattice parameter N may be negative and non-integer; the series then
// terminates after m+1 terms (or after x+1 terms when x is a nonnegative
// integer below m). beta_w is the weight exponent, distinct from the
// physical scale beta elsewhere in this library.
struct HahnSpec {
  Real alpha;
  Real beta_w;
  int m = 0;
  Real x;
  Real N;
};

// Coefficients of the three-term recurrence in the degree,
//   x h_m = alpha_m h_{m+1} + beta_m h_m + gamma_m h_{m-1}.
struct RecurrenceCoeffs {
  Real alpha_m;
  Real beta_m;
  Real gamma_m;
};

// Terminating-series evaluation:
//   h_m = (1-N)_m (beta+1)_m / m! * 3F2(-m, alpha+beta+m+1, -x; beta+1, 1-N; 1),
// summed term by term, each term obtained from the previous one by a
// rational update factor. Reference path.
Real hahn_series(const HahnSpec& spec, const PrecisionCtx& ctx);

// Recurrence coefficients at degree spec.m. Throws DegenerateDenominator
// when a needed denominator vanishes or alpha_m = 0.
RecurrenceCoeffs coeffs(const HahnSpec& spec, const PrecisionCtx& ctx);

// Upward recursion in the degree from h_0 = 1 (h_{-1} treated as 0).
// Alternate path, used to cross-validate the series.
Real hahn_recurrence(const HahnSpec& spec, const PrecisionCtx& ctx);

// Chebyshev polynomial of a discrete variable, t_m(x,N) = h_m^{(0,0)}(x,N).
Real chebyshev_t(int m, const Real& x, const Real& N, const PrecisionCtx& ctx);

}  // namespace dcmom
