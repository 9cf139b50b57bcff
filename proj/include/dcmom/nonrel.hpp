#pragma once

#include <vector>

#include "dcmom/real.hpp"
#include "dcmom/states.hpp"

namespace dcmom {

enum class NonrelRoute { closed_form, inversion, kp_recurrence };

const char* nonrel_route_name(NonrelRoute r);

// One hydrogenic moment <r^k> together with the route that produced it.
struct NonrelMoment {
  int k = 0;
  Real value;
  NonrelRoute route = NonrelRoute::closed_form;
};

// Closed-form <r^power> in terms of discrete Chebyshev polynomials.
// power >= -1 uses the positive branch
//   <r^{k-1}> = (1/2n) (n a0 / 2Z)^{k-1} t_k(n-l-1, -2l-1),   k = power+1,
// power <= -2 uses the negative branch
//   <r^{-k-2}> = (1/2n) (2Z/n a0)^{k+2} (2l-k)!/(2l+k+1)! t_k(n-l-1, -2l-1)
// with k = -power-2, valid for 0 <= k <= 2l (OutOfRange otherwise).
NonrelMoment moment_closed(const NonrelState& state, int power, const PrecisionCtx& ctx);

// One Kramers-Pasternack step:
//   <r^k> = (2n(2k+1)/(k+1)) (n a0/2Z) <r^{k-1}>
//         - (k((2l+1)^2 - k^2)/(k+1)) (n a0/2Z)^2 <r^{k-2}>,
// started from <1/r> = Z/(a0 n^2), <1> = 1.
Real kp_step(const NonrelState& state, int k, const Real& prev, const Real& prev2,
             const PrecisionCtx& ctx);

// Inversion relation mapping <r^{k-1}> to <r^{-k-2}>, 0 <= k <= 2l.
// The factorial ratio is computed as a running product.
Real inversion_map(const NonrelState& state, int k, const Real& pos, const PrecisionCtx& ctx);

// Moments for power in [kmin, kmax] along one route; powers a route cannot
// reach are skipped (kp_recurrence covers power >= -1, inversion covers
// -2-2l <= power <= -2).
std::vector<NonrelMoment> nonrel_table(const NonrelState& state, int kmin, int kmax,
                                       NonrelRoute route, const PrecisionCtx& ctx);

}  // namespace dcmom
