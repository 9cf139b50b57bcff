#pragma once

#include "dcmom/moments.hpp"

namespace dcmom {

// (A_p, B_p, C_p) from the Hahn-polynomial closed form, valid for p >= 0,
// e.g. 4 mu nu^2 (2 a beta)^p A_p =
//        a kappa (eps kappa + nu) h_{p+1}^{(0,0)}(n-1, -1-2nu)
//      - 2 (p+2)/(p+1) mu (eps^2 kappa^2 - nu^2) h_p^{(1,1)}(n-1, -1-2nu)
//      + a kappa (eps kappa - nu) h_{p+1}^{(0,0)}(n, 1-2nu),
// with n the radial quantum number. The three terms can cancel near n = 0
// where (eps kappa +- nu) gets small; if the sum loses more than half the
// working bits the evaluation is redone once at doubled precision.
MomentTriple triple_hahn(const DiracState& state, int p, const PrecisionCtx& ctx);

// The alternative discrete-Chebyshev closed form, valid for p >= 1:
//   2 a mu (2 a beta)^p A_p = a (mu + a kappa) h_p^{(0,0)}(n-1, -2nu)
//                           + 2 eps (mu^2 - a^2 kappa^2) h_{p-1}^{(1,1)}(n-1, -1-2nu)
//                           + a (mu - a kappa) h_p^{(0,0)}(n, -2nu),
// and similarly for B_p and C_p. Must agree with triple_hahn wherever both
// are defined.
MomentTriple triple_chebyshev(const DiracState& state, int p, const PrecisionCtx& ctx);

}  // namespace dcmom
