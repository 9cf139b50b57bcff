#pragma once

#include <array>
#include <vector>

#include "dcmom/moments.hpp"

namespace dcmom {

// Minimal dense 2x2 / 3x3 matrices over Real; just enough linear algebra
// for the transfer-matrix recurrences.
struct Mat2 {
  std::array<std::array<Real, 2>, 2> m;

  Real det() const;
  Mat2 inverse() const;  // throws SingularMatrix on zero determinant
  Mat2 mul(const Mat2& o) const;
  std::array<Real, 2> apply(const Real& x, const Real& y) const;
  Real max_abs() const;
  static Mat2 identity(int bits);
};

struct Mat3 {
  std::array<std::array<Real, 3>, 3> m;

  std::array<Real, 3> apply(const std::array<Real, 3>& v) const;
};

// One three-term step written as   lhs * t_{p+1} = D t_p + E t_{p-1}.
// lhs = (2 a beta)^2 for every operator in this module.
struct StepOperator3 {
  int p = 0;
  Real lhs;
  Mat3 D;
  Mat3 E;
};

struct StepOperator2 {
  int p = 0;
  Real lhs;
  Mat2 D;
  Mat2 E;
};

// Exact starting data (A,B,C) at p = -1, 0, 1.
struct InitialVectors {
  MomentTriple v_m1;
  MomentTriple v_0;
  MomentTriple v_1;
};

// (A_p, B_p) for the reduced two-component recurrences.
struct MomentPair {
  int p = 0;
  Real A;
  Real B;
};

InitialVectors initial_vectors(const DiracState& state, const PrecisionCtx& ctx);

// Vector generalization of the Kramers-Pasternack relation (valid from p = 0,
// started from the p = -1 and p = 0 vectors).
StepOperator3 mat1_operator(const DiracState& state, int p, const PrecisionCtx& ctx);
// Companion recurrence from the discrete-Chebyshev representation (p >= 1,
// started from the p = 0 and p = 1 vectors).
StepOperator3 mat2_operator(const DiracState& state, int p, const PrecisionCtx& ctx);
// (A,B)-only reductions of the two recurrences above.
StepOperator2 mat3_operator(const DiracState& state, int p, const PrecisionCtx& ctx);  // p >= 1
StepOperator2 mat4_operator(const DiracState& state, int p, const PrecisionCtx& ctx);  // p >= 0

MomentTriple step_mat1(const DiracState& state, int p, const MomentTriple& t_p,
                       const MomentTriple& t_pm1, const PrecisionCtx& ctx);
MomentTriple step_mat2(const DiracState& state, int p, const MomentTriple& t_p,
                       const MomentTriple& t_pm1, const PrecisionCtx& ctx);
MomentPair step_mat3(const DiracState& state, int p, const MomentPair& ab_p,
                     const MomentPair& ab_pm1, const PrecisionCtx& ctx);
MomentPair step_mat4(const DiracState& state, int p, const MomentPair& ab_p,
                     const MomentPair& ab_pm1, const PrecisionCtx& ctx);

// Two-term 2x2 relations: S_{p} maps (A,B) at p-1 up to p, its inverse maps
// back down. shabaev_up/down apply them; the matrices are exposed for the
// factorization checks.
Mat2 shabaev_matrix(const DiracState& state, int p, const PrecisionCtx& ctx);      // p-1 -> p
Mat2 shabaev_matrix_inv(const DiracState& state, int p, const PrecisionCtx& ctx);  // p -> p-1
MomentPair shabaev_up(const DiracState& state, int p, const Real& A_p, const Real& B_p,
                      const PrecisionCtx& ctx);
// Downward step; guards against 4 nu^2 = p^2 degeneracy (retrying once at
// doubled precision) and against leaving the convergence range.
MomentPair shabaev_down(const DiracState& state, int p, const Real& A_p, const Real& B_p,
                        const PrecisionCtx& ctx);

// P_p (A_p,B_p)^T = Q_p (A_{p-1},B_{p-1})^T obtained by subtracting the two
// reduced recurrences (their p+1 terms cancel).
struct PQPair {
  int p = 0;
  Mat2 P;
  Mat2 Q;
  Real detP;
  Real detQ;
};
PQPair build_PQ(const DiracState& state, int p, const PrecisionCtx& ctx);

// Determinants of P_p and Q_p predicted by the closed-form expressions.
Real detP_formula(const DiracState& state, int p, const PrecisionCtx& ctx);
Real detQ_formula(const DiracState& state, int p, const PrecisionCtx& ctx);
// det S_p = (4 nu^2 - p^2) p / (4 (a beta)^2 (p+1)).
Real detS_formula(const DiracState& state, int p, const PrecisionCtx& ctx);

// Residuals of the factorization S_p = P_p^{-1} Q_p and of the determinant
// identity, all relative. require(tol) throws IdentityViolation.
struct FactorizationReport {
  int p = 0;
  Real factor_residual;   // max |(P^{-1}Q - S)_ij| / max |S_ij|
  Real det_residual;      // |det S - formula| / |formula|
  Real inverse_residual;  // max |(S S^{-1} - I)_ij|
  bool pass(const Real& tol) const;
  void require(const Real& tol) const;
};
FactorizationReport factorization_check(const DiracState& state, int p, const PrecisionCtx& ctx);

// Affine combination of two step operators at the same p (arbitrary scalar
// mixes must propagate the same sequences). Throws DegenerateCombination
// when alpha + beta = 0, in which case the pair belongs to build_PQ.
StepOperator2 combine_recurrences(const Real& alpha, const Real& beta, const StepOperator2& s1,
                                  const StepOperator2& s2);
StepOperator3 combine_recurrences(const Real& alpha, const Real& beta, const StepOperator3& s1,
                                  const StepOperator3& s2);

// Propagates one route over [p_min, p_max]. The exact initial vectors fill
// p in {-1, 0, 1} where a route's step relation does not reach; only
// shabaev_down continues below p = -1, guarded by validate_power_range.
// Every emitted triple must pass the linear-dependence residual check at
// ctx.rel_tol, otherwise the whole table is rejected.
std::vector<MomentTriple> generate_table(const DiracState& state, int p_min, int p_max,
                                         Route route, const PrecisionCtx& ctx);

}  // namespace dcmom
