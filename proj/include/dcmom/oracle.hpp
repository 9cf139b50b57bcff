#pragma once

#include <memory>

#include "dcmom/moments.hpp"

namespace dcmom {

namespace detail {
class TanhSinh;
}

// Normalized bound-state Dirac radial pair (F, G) at radius r, built from
// the terminating confluent-hypergeometric representation
//   F(r) =  c_+ x^{nu-1} e^{-x/2} [ (N - kappa) M(-n_r, 2nu+1, x) - n_r M(1-n_r, 2nu+1, x) ]
//   G(r) = -c_- x^{nu-1} e^{-x/2} [ (N - kappa) M(-n_r, 2nu+1, x) + n_r M(1-n_r, 2nu+1, x) ]
// with x = 2 a beta r and N = mu/a. The normalization makes the p = 0
// moment triple equal (1, eps, kappa (1-eps^2)/(2 mu)), which also fixes the
// relative sign of F and G.
struct RadialPair {
  Real F;
  Real G;
};
RadialPair radial_FG(const DiracState& state, const Real& r, const PrecisionCtx& ctx);

// Normalized nonrelativistic radial function R_{nl}(r) (Laguerre form).
Real nonrel_radial_R(const NonrelState& state, const Real& r, const PrecisionCtx& ctx);

// Significant digits targeted by the quadrature at this precision
// (30 at 256 bits, scaled linearly, floor of 15).
int quadrature_digits(const PrecisionCtx& ctx);

// Brute-force oracle for the relativistic moment triples: adaptive
// tanh-sinh panels in x = 2 a beta r, split near the integrand peak, with
// the tail truncated where the integrand falls below 2^-(bits+20) of its
// peak. Wavefunction evaluations are shared across all powers requested
// from the same engine.
class DiracQuadrature {
 public:
  DiracQuadrature(const DiracState& state, const PrecisionCtx& ctx, int p_max_hint = 8);
  ~DiracQuadrature();
  DiracQuadrature(DiracQuadrature&&) noexcept;
  DiracQuadrature& operator=(DiracQuadrature&&) noexcept;

  // Throws DivergentIntegral below the convergence bound and
  // QuadratureNonConvergence if refinement stalls.
  MomentTriple triple(int p);

 private:
  DiracState state_;
  PrecisionCtx ctx_;
  Real two_lambda_;
  std::unique_ptr<detail::TanhSinh> ts_;
};

// Same machinery for the hydrogenic <r^k>.
class NonrelQuadrature {
 public:
  NonrelQuadrature(const NonrelState& state, const PrecisionCtx& ctx, int k_max_hint = 8);
  ~NonrelQuadrature();
  NonrelQuadrature(NonrelQuadrature&&) noexcept;
  NonrelQuadrature& operator=(NonrelQuadrature&&) noexcept;

  Real moment(int k);

 private:
  NonrelState state_;
  PrecisionCtx ctx_;
  std::unique_ptr<detail::TanhSinh> ts_;
};

// One-shot conveniences.
MomentTriple quadrature_triple(const DiracState& state, int p, const PrecisionCtx& ctx);
Real quadrature_nonrel(const NonrelState& state, int k, const PrecisionCtx& ctx);

}  // namespace dcmom
