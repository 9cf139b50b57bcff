#include "dcmom/recurrences.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dcmom/closed_form.hpp"
#include "dcmom/errors.hpp"
#include "dcmom/oracle.hpp"

namespace dcmom {

Real Mat2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Mat2 Mat2::inverse() const {
  Real d = det();
  if (d.is_zero()) throw SingularMatrix("2x2 matrix is singular");
  return Mat2{{{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}}};
}

Mat2 Mat2::mul(const Mat2& o) const {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

std::array<Real, 2> Mat2::apply(const Real& x, const Real& y) const {
  return {m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y};
}

Real Mat2::max_abs() const {
  Real r = abs(m[0][0]);
  r = max(r, abs(m[0][1]));
  r = max(r, abs(m[1][0]));
  r = max(r, abs(m[1][1]));
  return r;
}

Mat2 Mat2::identity(int bits) {
  Real one = Real::of(1L, bits);
  Real zero = Real::of(0L, bits);
  return Mat2{{{{one, zero}, {zero, one}}}};
}

std::array<Real, 3> Mat3::apply(const std::array<Real, 3>& v) const {
  std::array<Real, 3> r;
  for (int i = 0; i < 3; ++i)
    r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

namespace {

// Shared per-operator scalars, all at ctx precision.
struct Params {
  Real nu, eps, a, mu, kap, beta, a2, nu2, lhs;
};

Params params_of(const DiracState& state, const PrecisionCtx& ctx) {
  Spectral sp = derive_parameters(state, ctx);
  Real mu = state.mu().rounded_to(ctx.bits);
  Real kap = Real::of(static_cast<long>(state.kappa()), ctx.bits);
  Real beta = state.beta_scale().rounded_to(ctx.bits);
  Real a2 = sp.a * sp.a;
  Real nu2 = sp.nu * sp.nu;
  Real twoab = 2L * sp.a * beta;
  Real lhs = twoab * twoab;
  return Params{std::move(sp.nu), std::move(sp.eps), std::move(sp.a), std::move(mu),
                std::move(kap),   std::move(beta),   std::move(a2),   std::move(nu2),
                std::move(lhs)};
}

MomentTriple make_triple(int p, std::array<Real, 3> v, Route route) {
  return MomentTriple{p, std::move(v[0]), std::move(v[1]), std::move(v[2]), route};
}

}  // namespace

InitialVectors initial_vectors(const DiracState& state, const PrecisionCtx& ctx) {
  Params q = params_of(state, ctx);
  // p = -1
  Real Am1 = (q.beta / (q.mu * q.nu)) * q.a2 * (q.eps * q.nu + q.mu * q.a);
  Real Bm1 = q.beta * q.a2 / q.mu;
  Real Cm1 = (q.kap / (2L * q.mu * q.nu)) * q.a2 * q.a * q.beta;
  // p = 0
  Real A0 = Real::of(1L, ctx.bits);
  Real B0 = q.eps;
  Real C0 = (q.kap / (2L * q.mu)) * q.a2;
  // p = 1
  Real den1 = 2L * q.beta * q.mu * q.a2;
  Real A1 = (3L * q.eps * q.mu * q.mu - q.kap * q.a2 * (1L + q.eps * q.kap)) / den1;
  Real B1 = (3L * q.eps * q.eps * q.mu * q.mu - q.a2 * (q.eps * q.kap + q.nu2)) / den1;
  Real C1 = (2L * q.eps * q.kap - 1L) / (4L * q.beta);
  return InitialVectors{
      MomentTriple{-1, std::move(Am1), std::move(Bm1), std::move(Cm1), Route::hahn_form},
      MomentTriple{0, std::move(A0), std::move(B0), std::move(C0), Route::hahn_form},
      MomentTriple{1, std::move(A1), std::move(B1), std::move(C1), Route::hahn_form}};
}

StepOperator3 mat1_operator(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p < 0) throw OutOfRange("mat1 step requires p >= 0");
  Params q = params_of(state, ctx);
  const long p1 = p + 1, p2 = p + 2;
  Real d = 4L * q.beta * q.eps * q.mu * Real::of(2L * p + 3, ctx.bits) / p2;
  Mat3 D{{{{d, Real::of(0L, ctx.bits), Real::of(0L, ctx.bits)},
           {Real::of(0L, ctx.bits), d, Real::of(0L, ctx.bits)},
           {Real::of(0L, ctx.bits), Real::of(0L, ctx.bits), d}}}};

  Real p1p2 = Real::of(p1 * p2, ctx.bits);
  Real core = Real::of(static_cast<long>(p) * p2, ctx.bits) *
              (4L * q.nu2 - Real::of(p1 * p1, ctx.bits));
  Mat3 M{{{{(core + 4L * q.kap * q.kap) / p1p2, 4L * q.kap * Real::of(p1, ctx.bits) / p2,
            -8L * q.kap * q.mu / p1p2},
           {4L * q.kap * Real::of(p1, ctx.bits) / p2,
            (4L * q.nu2 - Real::of(static_cast<long>(p) * p2, ctx.bits)) *
                Real::of(p1, ctx.bits) / p2,
            -8L * q.mu * Real::of(p1, ctx.bits) / p2},
           {2L * q.kap * q.mu / p1p2, 2L * q.mu * Real::of(p1, ctx.bits) / p2,
            (core - 4L * q.mu * q.mu) / p1p2}}}};
  Mat3 E;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) E.m[i][j] = -M.m[i][j];
  return StepOperator3{p, q.lhs, std::move(D), std::move(E)};
}

StepOperator3 mat2_operator(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p < 1) throw OutOfRange("mat2 step requires p >= 1");
  Params q = params_of(state, ctx);
  const long p1 = p + 1, p2 = p + 2;
  const Real zero = Real::of(0L, ctx.bits);
  Real app1 = q.a2 * Real::of(p1 * p1, ctx.bits);  // a^2 (p+1)^2
  Real a2pp2 = q.a2 * Real::of(static_cast<long>(p) * p2, ctx.bits);

  Mat3 G{{{{4L * q.eps * q.mu * (app1 - 1L) / a2pp2, 4L * q.eps * q.eps * q.mu / a2pp2,
            Real::of(-4L, ctx.bits)},
           {-4L * q.eps * q.eps * q.mu / a2pp2,
            4L * q.eps * q.mu * (app1 + q.eps * q.eps) / a2pp2, -4L * q.eps},
           {Real::of(-1L, ctx.bits), q.eps, 4L * q.eps * q.mu}}}};
  Real a2p2 = q.a2 * p2;
  Mat3 H{{{{(app1 - 1L) / a2p2, q.eps / a2p2, zero},
           {-(q.eps / a2p2), (app1 + q.eps * q.eps) / a2p2, zero},
           {zero, zero, Real::of(static_cast<long>(p), ctx.bits)}}}};

  Real dscale = q.beta * Real::of(2L * p + 1, ctx.bits) / p1;
  Real escale = -((4L * q.nu2 - Real::of(static_cast<long>(p) * p, ctx.bits)) / p1);
  Mat3 D, E;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      D.m[i][j] = dscale * G.m[i][j];
      E.m[i][j] = escale * H.m[i][j];
    }
  return StepOperator3{p, q.lhs, std::move(D), std::move(E)};
}

StepOperator2 mat3_operator(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p < 1) throw OutOfRange("mat3 step requires p >= 1");
  Params q = params_of(state, ctx);
  const long p1 = p + 1, p2 = p + 2;
  Real app1 = q.a2 * Real::of(p1 * p1, ctx.bits);
  Real pp2 = q.a2 * Real::of(static_cast<long>(p) * p2, ctx.bits);  // a^2 p (p+2)
  Real mu2 = q.mu * q.mu;
  Real den = q.a2 * q.mu * Real::of(static_cast<long>(p) * p2, ctx.bits);
  Real ekp = 2L * q.kap + q.eps * p1;        // 2 kappa + eps (p+1)
  Real kep = 2L * q.eps * q.kap + (p + 1L);  // 2 eps kappa + p + 1

  Mat2 G{{{{(4L * q.eps * mu2 * (app1 - 1L) - pp2 * ekp) / den,
            (4L * q.eps * q.eps * mu2 + pp2 * kep) / den},
           {-(q.eps * (4L * q.eps * mu2 + pp2 * ekp) / den),
            q.eps * (4L * mu2 * (app1 + q.eps * q.eps) + pp2 * kep) / den}}}};
  Mat2 H{{{{app1 - 1L, q.eps}, {-q.eps, app1 + q.eps * q.eps}}}};

  Real dscale = q.beta * Real::of(2L * p + 1, ctx.bits) / p1;
  Real escale =
      -((4L * q.nu2 - Real::of(static_cast<long>(p) * p, ctx.bits)) /
        (q.a2 * Real::of(p1 * p2, ctx.bits)));
  Mat2 D, E;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      D.m[i][j] = dscale * G.m[i][j];
      E.m[i][j] = escale * H.m[i][j];
    }
  return StepOperator2{p, q.lhs, std::move(D), std::move(E)};
}

StepOperator2 mat4_operator(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p < 0) throw OutOfRange("mat4 step requires p >= 0");
  Params q = params_of(state, ctx);
  const long p1 = p + 1, p2 = p + 2;
  Real d = 4L * q.beta * q.eps * q.mu * Real::of(2L * p + 3, ctx.bits) / p2;
  Mat2 D{{{{d, Real::of(0L, ctx.bits)}, {Real::of(0L, ctx.bits), d}}}};

  Real p1p2 = Real::of(p1 * p2, ctx.bits);
  Real k11 = -(Real::of(static_cast<long>(p), ctx.bits) *
               (2L * q.eps * q.kap -
                p2 * (4L * q.nu2 - Real::of(p1 * p1, ctx.bits))) /
               p1p2);
  Real k12 = 2L * q.kap *
             (2L * q.eps * q.kap - 1L + Real::of(p1 * (2L * p + 3), ctx.bits)) / p1p2;
  Real k21 = -(2L * q.eps * Real::of(static_cast<long>(p) * p1, ctx.bits) / p2);
  Real k22 = (4L * (q.eps * q.kap + q.nu2) - Real::of(static_cast<long>(p) * p, ctx.bits)) *
             Real::of(p1, ctx.bits) / p2;
  Mat2 E{{{{-k11, -k12}, {-k21, -k22}}}};
  return StepOperator2{p, q.lhs, std::move(D), std::move(E)};
}

MomentTriple step_mat1(const DiracState& state, int p, const MomentTriple& t_p,
                       const MomentTriple& t_pm1, const PrecisionCtx& ctx) {
  StepOperator3 op = mat1_operator(state, p, ctx);
  std::array<Real, 3> v = op.D.apply({t_p.A, t_p.B, t_p.C});
  std::array<Real, 3> w = op.E.apply({t_pm1.A, t_pm1.B, t_pm1.C});
  for (int i = 0; i < 3; ++i) v[i] = (v[i] + w[i]) / op.lhs;
  return make_triple(p + 1, std::move(v), Route::recurrence_mat1);
}

MomentTriple step_mat2(const DiracState& state, int p, const MomentTriple& t_p,
                       const MomentTriple& t_pm1, const PrecisionCtx& ctx) {
  StepOperator3 op = mat2_operator(state, p, ctx);
  std::array<Real, 3> v = op.D.apply({t_p.A, t_p.B, t_p.C});
  std::array<Real, 3> w = op.E.apply({t_pm1.A, t_pm1.B, t_pm1.C});
  for (int i = 0; i < 3; ++i) v[i] = (v[i] + w[i]) / op.lhs;
  return make_triple(p + 1, std::move(v), Route::recurrence_mat2);
}

MomentPair step_mat3(const DiracState& state, int p, const MomentPair& ab_p,
                     const MomentPair& ab_pm1, const PrecisionCtx& ctx) {
  StepOperator2 op = mat3_operator(state, p, ctx);
  auto v = op.D.apply(ab_p.A, ab_p.B);
  auto w = op.E.apply(ab_pm1.A, ab_pm1.B);
  return MomentPair{p + 1, (v[0] + w[0]) / op.lhs, (v[1] + w[1]) / op.lhs};
}

MomentPair step_mat4(const DiracState& state, int p, const MomentPair& ab_p,
                     const MomentPair& ab_pm1, const PrecisionCtx& ctx) {
  StepOperator2 op = mat4_operator(state, p, ctx);
  auto v = op.D.apply(ab_p.A, ab_p.B);
  auto w = op.E.apply(ab_pm1.A, ab_pm1.B);
  return MomentPair{p + 1, (v[0] + w[0]) / op.lhs, (v[1] + w[1]) / op.lhs};
}

namespace {

// Coefficient matrix of the upward two-term step at p (maps level p to p+1).
Mat2 shabaev_up_matrix_at(const Params& q, long p, int bits) {
  const long p1 = p + 1, p2 = p + 2;
  Real den = 4L * q.a2 * p2 * q.beta * q.mu;
  Real ke = q.eps * q.kap;  // kappa eps
  Real u11 = -(Real::of(p1, bits) *
               (4L * q.nu2 * q.eps + 2L * q.kap * p2 + q.eps * p1 * (2L * ke + p2)) / den);
  Real u12 = (4L * q.mu * q.mu * p2 + p1 * (2L * ke + p1) * (2L * ke + p2)) / den;
  Real u21 = -(Real::of(p1, bits) *
               (4L * q.nu2 + 2L * ke * (2L * p + 3L) + q.eps * q.eps * Real::of(p1 * p2, bits)) /
               den);
  Real u22 = (4L * q.mu * q.mu * q.eps * p2 + p1 * (2L * ke + p1) * (2L * q.kap + q.eps * p2)) /
             den;
  return Mat2{{{{std::move(u11), std::move(u12)}, {std::move(u21), std::move(u22)}}}};
}

// Coefficient matrix of the downward two-term step at p (maps level p to p-1).
Mat2 shabaev_down_matrix_at(const Params& q, long p, int bits) {
  const long p1 = p + 1;
  Real res = 4L * q.nu2 - Real::of(p * p, bits);
  Real ke = q.eps * q.kap;
  Real den_a = q.mu * res * p;
  Real den_b = q.mu * res;
  Real d11 = q.beta * (4L * q.mu * q.mu * q.eps * p1 + p * (2L * ke + p) * (2L * q.kap + q.eps * p1)) / den_a;
  Real d12 = -(q.beta * (4L * q.mu * q.mu * p1 + p * (2L * ke + p) * (2L * ke + p1)) / den_a);
  Real d21 = q.beta * (4L * q.nu2 + 2L * ke * (2L * p + 1L) + q.eps * q.eps * Real::of(p * p1, bits)) / den_b;
  Real d22 = -(q.beta * (4L * q.nu2 * q.eps + 2L * q.kap * p1 + q.eps * p * (2L * ke + p1)) / den_b);
  return Mat2{{{{std::move(d11), std::move(d12)}, {std::move(d21), std::move(d22)}}}};
}

// True when 4 nu^2 - p^2 is too close to zero to divide by at this precision.
bool near_resonance(const Params& q, long p, int bits) {
  Real res = abs(4L * q.nu2 - Real::of(p * p, bits));
  Real scale = max(4L * q.nu2, Real::of(p * p, bits));
  return res <= Real::pow2(-(bits / 2), bits) * scale;
}

}  // namespace

Mat2 shabaev_matrix(const DiracState& state, int p, const PrecisionCtx& ctx) {
  Params q = params_of(state, ctx);
  if (p + 1 == 0) throw DegenerateDenominator("shabaev matrix undefined at p = -1");
  return shabaev_up_matrix_at(q, p - 1, ctx.bits);
}

Mat2 shabaev_matrix_inv(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p == 0) throw DegenerateDenominator("downward step undefined at p = 0");
  Params q = params_of(state, ctx);
  if (near_resonance(q, p, ctx.bits))
    throw DegenerateDenominator("4 nu^2 - p^2 vanishes at p = " + std::to_string(p));
  return shabaev_down_matrix_at(q, p, ctx.bits);
}

MomentPair shabaev_up(const DiracState& state, int p, const Real& A_p, const Real& B_p,
                      const PrecisionCtx& ctx) {
  if (p + 2 == 0) throw DegenerateDenominator("upward step undefined at p = -2");
  Params q = params_of(state, ctx);
  Mat2 S = shabaev_up_matrix_at(q, p, ctx.bits);
  auto v = S.apply(A_p, B_p);
  return MomentPair{p + 1, std::move(v[0]), std::move(v[1])};
}

MomentPair shabaev_down(const DiracState& state, int p, const Real& A_p, const Real& B_p,
                        const PrecisionCtx& ctx) {
  if (p == 0) throw DegenerateDenominator("downward step undefined at p = 0");
  if (!validate_power_range(state, p - 1, ctx))
    throw DivergentIntegral("target power " + std::to_string(p - 1) +
                            " violates p > -1 - 2 nu");
  Params q = params_of(state, ctx);
  if (near_resonance(q, p, ctx.bits)) {
    // One retry at doubled precision before giving up.
    PrecisionCtx wide = ctx.doubled();
    Params qw = params_of(state, wide);
    if (near_resonance(qw, p, wide.bits))
      throw DegenerateDenominator("4 nu^2 - p^2 vanishes at p = " + std::to_string(p));
    Mat2 S = shabaev_down_matrix_at(qw, p, wide.bits);
    auto v = S.apply(A_p.rounded_to(wide.bits), B_p.rounded_to(wide.bits));
    return MomentPair{p - 1, v[0].rounded_to(ctx.bits), v[1].rounded_to(ctx.bits)};
  }
  Mat2 S = shabaev_down_matrix_at(q, p, ctx.bits);
  auto v = S.apply(A_p, B_p);
  return MomentPair{p - 1, std::move(v[0]), std::move(v[1])};
}

PQPair build_PQ(const DiracState& state, int p, const PrecisionCtx& ctx) {
  if (p < 1) throw OutOfRange("P/Q construction requires p >= 1");
  StepOperator2 s3 = mat3_operator(state, p, ctx);
  StepOperator2 s4 = mat4_operator(state, p, ctx);
  Mat2 P, Q;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      P.m[i][j] = s4.D.m[i][j] - s3.D.m[i][j];
      Q.m[i][j] = s3.E.m[i][j] - s4.E.m[i][j];
    }
  Real detP = P.det();
  Real detQ = Q.det();
  Real scale = P.max_abs();
  if (detP.is_zero() || abs(detP) < Real::pow2(-(ctx.bits - 16), ctx.bits) * scale * scale)
    throw SingularMatrix("P_p numerically singular at p = " + std::to_string(p));
  return PQPair{p, std::move(P), std::move(Q), std::move(detP), std::move(detQ)};
}

Real detP_formula(const DiracState& state, int p, const PrecisionCtx& ctx) {
  Params q = params_of(state, ctx);
  const long p1 = p + 1, p2 = p + 2;
  Real common = q.kap * q.a2 * p2 * (2L * p + 1L) + 2L * q.eps * q.mu * q.mu;
  return -(8L * q.beta * q.beta * q.eps * common /
           Real::of(static_cast<long>(p) * p1 * p2 * p2, ctx.bits));
}

Real detQ_formula(const DiracState& state, int p, const PrecisionCtx& ctx) {
  Params q = params_of(state, ctx);
  const long p1 = p + 1, p2 = p + 2;
  Real common = q.kap * q.a2 * p2 * (2L * p + 1L) + 2L * q.eps * q.mu * q.mu;
  Real res = 4L * q.nu2 - Real::of(static_cast<long>(p) * p, ctx.bits);
  return -(2L * q.eps * res * common / (q.a2 * Real::of(p2 * p2 * p1 * p1, ctx.bits)));
}

Real detS_formula(const DiracState& state, int p, const PrecisionCtx& ctx) {
  Params q = params_of(state, ctx);
  Real res = 4L * q.nu2 - Real::of(static_cast<long>(p) * p, ctx.bits);
  Real ab = q.a * q.beta;
  return res * p / (4L * ab * ab * (p + 1L));
}

bool FactorizationReport::pass(const Real& tol) const {
  return factor_residual <= tol && det_residual <= tol && inverse_residual <= tol;
}

void FactorizationReport::require(const Real& tol) const {
  if (!pass(tol))
    throw IdentityViolation(
        "factorization identity failed at p = " + std::to_string(p),
        max(factor_residual, max(det_residual, inverse_residual)).str(6));
}

FactorizationReport factorization_check(const DiracState& state, int p, const PrecisionCtx& ctx) {
  PQPair pq = build_PQ(state, p, ctx);
  Mat2 R = pq.P.inverse().mul(pq.Q);
  Mat2 S = shabaev_matrix(state, p, ctx);

  Real sscale = S.max_abs();
  Real fr = Real::of(0L, ctx.bits);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) fr = max(fr, abs(R.m[i][j] - S.m[i][j]));
  fr = fr / sscale;

  Real want = detS_formula(state, p, ctx);
  Real dr = abs(S.det() - want) / abs(want);

  Mat2 I = S.mul(shabaev_matrix_inv(state, p, ctx));
  Real ir = Real::of(0L, ctx.bits);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Real target = Real::of(i == j ? 1L : 0L, ctx.bits);
      ir = max(ir, abs(I.m[i][j] - target));
    }
  return FactorizationReport{p, std::move(fr), std::move(dr), std::move(ir)};
}

StepOperator2 combine_recurrences(const Real& alpha, const Real& beta, const StepOperator2& s1,
                                  const StepOperator2& s2) {
  if (s1.p != s2.p) throw OutOfRange("operators must sit at the same power");
  Real w = alpha + beta;
  if (w.is_zero())
    throw DegenerateCombination("alpha_p + beta_p = 0: use the P/Q construction instead");
  StepOperator2 out;
  out.p = s1.p;
  out.lhs = w * s1.lhs;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out.D.m[i][j] = alpha * s1.D.m[i][j] + beta * s2.D.m[i][j];
      out.E.m[i][j] = alpha * s1.E.m[i][j] + beta * s2.E.m[i][j];
    }
  return out;
}

StepOperator3 combine_recurrences(const Real& alpha, const Real& beta, const StepOperator3& s1,
                                  const StepOperator3& s2) {
  if (s1.p != s2.p) throw OutOfRange("operators must sit at the same power");
  Real w = alpha + beta;
  if (w.is_zero())
    throw DegenerateCombination("alpha_p + beta_p = 0: use the P/Q construction instead");
  StepOperator3 out;
  out.p = s1.p;
  out.lhs = w * s1.lhs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.D.m[i][j] = alpha * s1.D.m[i][j] + beta * s2.D.m[i][j];
      out.E.m[i][j] = alpha * s1.E.m[i][j] + beta * s2.E.m[i][j];
    }
  return out;
}

namespace {

void emit(std::vector<MomentTriple>& out, const DiracState& state, MomentTriple t, Route route,
          const PrecisionCtx& ctx) {
  t.route = route;
  Real r = indint1_residual(state, t, ctx);
  if (!(r <= ctx.rel_tol))
    throw IdentityViolation("table rejected: linear-dependence residual " + r.str(6) +
                                " at p = " + std::to_string(t.p) + " on route " +
                                route_name(route),
                            r.str(6));
  out.push_back(std::move(t));
}

MomentTriple pair_to_triple(const DiracState& state, const MomentPair& ab, Route route,
                            const PrecisionCtx& ctx) {
  Real C = c_from_ab(state, ab.p, ab.A, ab.B, ctx);
  return MomentTriple{ab.p, ab.A, ab.B, std::move(C), route};
}

}  // namespace

std::vector<MomentTriple> generate_table(const DiracState& state, int p_min, int p_max,
                                         Route route, const PrecisionCtx& ctx) {
  if (p_min > p_max) throw OutOfRange("p_min must not exceed p_max");
  if (!validate_power_range(state, p_min, ctx))
    throw DivergentIntegral("p_min = " + std::to_string(p_min) +
                            " violates the convergence bound p > -1 - 2 nu");
  if (route != Route::shabaev_down && route != Route::quadrature && p_min < -1)
    throw OutOfRange(std::string(route_name(route)) +
                     " reaches p = -1 at most; use shabaev_down or quadrature below that");
  if (route == Route::shabaev_down && p_max > 1)
    throw OutOfRange("shabaev_down covers p <= 1; use shabaev_up above that");

  const InitialVectors iv = initial_vectors(state, ctx);
  std::vector<MomentTriple> out;

  auto in_range = [&](int p) { return p >= p_min && p <= p_max; };

  switch (route) {
    case Route::hahn_form: {
      if (in_range(-1)) emit(out, state, iv.v_m1, route, ctx);
      for (int p = std::max(0, p_min); p <= p_max; ++p)
        emit(out, state, triple_hahn(state, p, ctx), route, ctx);
      break;
    }
    case Route::chebyshev_form: {
      if (in_range(-1)) emit(out, state, iv.v_m1, route, ctx);
      if (in_range(0)) emit(out, state, iv.v_0, route, ctx);
      for (int p = std::max(1, p_min); p <= p_max; ++p)
        emit(out, state, triple_chebyshev(state, p, ctx), route, ctx);
      break;
    }
    case Route::recurrence_mat1: {
      MomentTriple prev = iv.v_m1;
      MomentTriple cur = iv.v_0;
      if (in_range(-1)) emit(out, state, prev, route, ctx);
      if (in_range(0)) emit(out, state, cur, route, ctx);
      for (int p = 1; p <= p_max; ++p) {
        MomentTriple next = step_mat1(state, p - 1, cur, prev, ctx);
        if (in_range(p)) emit(out, state, next, route, ctx);
        prev = std::move(cur);
        cur = std::move(next);
      }
      break;
    }
    case Route::recurrence_mat2: {
      if (in_range(-1)) emit(out, state, iv.v_m1, route, ctx);
      MomentTriple prev = iv.v_0;
      MomentTriple cur = iv.v_1;
      if (in_range(0)) emit(out, state, prev, route, ctx);
      if (in_range(1)) emit(out, state, cur, route, ctx);
      for (int p = 2; p <= p_max; ++p) {
        MomentTriple next = step_mat2(state, p - 1, cur, prev, ctx);
        if (in_range(p)) emit(out, state, next, route, ctx);
        prev = std::move(cur);
        cur = std::move(next);
      }
      break;
    }
    case Route::reduced_mat3: {
      if (in_range(-1)) emit(out, state, iv.v_m1, route, ctx);
      MomentPair prev{0, iv.v_0.A, iv.v_0.B};
      MomentPair cur{1, iv.v_1.A, iv.v_1.B};
      if (in_range(0)) emit(out, state, pair_to_triple(state, prev, route, ctx), route, ctx);
      if (in_range(1)) emit(out, state, pair_to_triple(state, cur, route, ctx), route, ctx);
      for (int p = 2; p <= p_max; ++p) {
        MomentPair next = step_mat3(state, p - 1, cur, prev, ctx);
        if (in_range(p)) emit(out, state, pair_to_triple(state, next, route, ctx), route, ctx);
        prev = std::move(cur);
        cur = std::move(next);
      }
      break;
    }
    case Route::reduced_mat4: {
      MomentPair prev{-1, iv.v_m1.A, iv.v_m1.B};
      MomentPair cur{0, iv.v_0.A, iv.v_0.B};
      if (in_range(-1)) emit(out, state, pair_to_triple(state, prev, route, ctx), route, ctx);
      if (in_range(0)) emit(out, state, pair_to_triple(state, cur, route, ctx), route, ctx);
      for (int p = 1; p <= p_max; ++p) {
        MomentPair next = step_mat4(state, p - 1, cur, prev, ctx);
        if (in_range(p)) emit(out, state, pair_to_triple(state, next, route, ctx), route, ctx);
        prev = std::move(cur);
        cur = std::move(next);
      }
      break;
    }
    case Route::shabaev_up: {
      if (in_range(-1)) emit(out, state, iv.v_m1, route, ctx);
      MomentPair cur{0, iv.v_0.A, iv.v_0.B};
      if (in_range(0)) emit(out, state, pair_to_triple(state, cur, route, ctx), route, ctx);
      for (int p = 1; p <= p_max; ++p) {
        cur = shabaev_up(state, p - 1, cur.A, cur.B, ctx);
        if (in_range(p)) emit(out, state, pair_to_triple(state, cur, route, ctx), route, ctx);
      }
      break;
    }
    case Route::shabaev_down: {
      if (in_range(1)) emit(out, state, iv.v_1, route, ctx);
      if (in_range(0)) emit(out, state, iv.v_0, route, ctx);
      if (in_range(-1)) emit(out, state, iv.v_m1, route, ctx);
      MomentPair cur{-1, iv.v_m1.A, iv.v_m1.B};
      for (int p = -2; p >= p_min; --p) {
        cur = shabaev_down(state, p + 1, cur.A, cur.B, ctx);
        if (in_range(p)) emit(out, state, pair_to_triple(state, cur, route, ctx), route, ctx);
      }
      std::sort(out.begin(), out.end(),
                [](const MomentTriple& x, const MomentTriple& y) { return x.p < y.p; });
      break;
    }
    case Route::quadrature: {
      DiracQuadrature quad(state, ctx, std::max(p_max, 2));
      for (int p = p_min; p <= p_max; ++p) {
        if (!validate_power_range(state, p, ctx)) continue;
        emit(out, state, quad.triple(p), route, ctx);
      }
      break;
    }
  }
  return out;
}

}  // namespace dcmom
