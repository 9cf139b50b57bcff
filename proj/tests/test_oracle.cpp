#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcmom/closed_form.hpp"
#include "dcmom/errors.hpp"
#include "dcmom/oracle.hpp"
#include "dcmom/recurrences.hpp"
#include "helpers.hpp"

using namespace dcmom;
using dcmom::testing::rd;
using dcmom::testing::tol_digits;

static const PrecisionCtx ctx = PrecisionCtx::standard(256);
static const Real qtol = tol_digits(quadrature_digits(ctx) - 2);

TEST_CASE("p = 0 moments reproduce the exact vector") {
  for (auto [n_r, kappa, mus] :
       {std::tuple{0, -1, "0.5"}, {1, -1, "0.5"}, {1, 1, "0.3"}, {2, -2, "0.9"},
        {0, -2, "1.0"}, {3, 2, "1.7"}}) {
    DiracState st = DiracState::make(n_r, kappa, rd(mus), ctx);
    Spectral sp = derive_parameters(st, ctx);
    MomentTriple q = quadrature_triple(st, 0, ctx);
    CHECK(rel_diff(q.A, Real::of(1L, ctx.bits)) < qtol);
    CHECK(rel_diff(q.B, sp.eps) < qtol);
    Real c0 = Real::of(static_cast<long>(kappa), ctx.bits) * sp.a * sp.a / (2L * st.mu());
    CHECK(rel_diff(q.C, c0) < qtol);
    CHECK(q.C.sign() == (kappa > 0 ? 1 : -1));  // sign convention pinned by C_0
  }
}

TEST_CASE("p = -1 matches the exact initial vector") {
  for (auto [n_r, kappa, mus] : {std::tuple{0, -1, "0.5"}, {1, -1, "0.9"}, {2, 2, "1.1"}}) {
    DiracState st = DiracState::make(n_r, kappa, rd(mus), ctx);
    InitialVectors iv = initial_vectors(st, ctx);
    MomentTriple q = quadrature_triple(st, -1, ctx);
    CHECK(rel_diff(q.A, iv.v_m1.A) < qtol);
    CHECK(rel_diff(q.B, iv.v_m1.B) < qtol);
    CHECK(rel_diff(q.C, iv.v_m1.C) < qtol);
  }
}

TEST_CASE("ground state p = 1") {
  DiracState st = DiracState::make(0, -1, rd("0.5"), ctx);
  Spectral sp = derive_parameters(st, ctx);
  MomentTriple q = quadrature_triple(st, 1, ctx);
  CHECK(rel_diff(q.A, (1L + 2L * sp.eps) / (2L * st.mu())) < qtol);
}

TEST_CASE("engine agrees with the closed forms over many powers") {
  DiracState st = DiracState::make(2, -1, rd("0.6"), ctx);
  DiracQuadrature quad(st, ctx, 8);
  InitialVectors iv = initial_vectors(st, ctx);
  for (int p = -1; p <= 8; ++p) {
    MomentTriple q = quad.triple(p);
    MomentTriple want = p < 0 ? iv.v_m1 : triple_hahn(st, p, ctx);
    CHECK(rel_diff(q.A, want.A) < qtol);
    CHECK(rel_diff(q.B, want.B) < qtol);
    CHECK(rel_diff(q.C, want.C) < qtol);
  }
}

TEST_CASE("scale covariance in beta") {
  DiracState st = DiracState::make(0, -1, rd("0.5"), rd("2"), ctx);
  Spectral sp = derive_parameters(st, ctx);
  MomentTriple q = quadrature_triple(st, 1, ctx);
  // A_1 = (1 + 2 eps)/(2 beta mu) with beta = 2
  CHECK(rel_diff(q.A, (1L + 2L * sp.eps) / (4L * st.mu())) < qtol);
}

TEST_CASE("n_r = 0 radial functions have constant F/G ratio") {
  DiracState st = DiracState::make(0, -2, rd("1.0"), ctx);
  RadialPair a = radial_FG(st, rd("0.3"), ctx);
  RadialPair b = radial_FG(st, rd("1.7"), ctx);
  RadialPair c = radial_FG(st, rd("6.0"), ctx);
  CHECK(rel_diff(a.F / a.G, b.F / b.G) < rd("1e-70"));
  CHECK(rel_diff(a.F / a.G, c.F / c.G) < rd("1e-70"));
}

TEST_CASE("small-r density exponent tends to 2 nu") {
  DiracState st = DiracState::make(1, -1, rd("0.8"), ctx);
  Spectral sp = derive_parameters(st, ctx);
  // log-slope of r^2 (F^2 + G^2) on a geometric mesh near the origin
  Real r1 = rd("1e-10");
  Real r2 = rd("1e-11");
  auto dens = [&](const Real& r) {
    RadialPair fg = radial_FG(st, r, ctx);
    return r * r * (fg.F * fg.F + fg.G * fg.G);
  };
  Real slope = log(dens(r1) / dens(r2)) / log(r1 / r2);
  CHECK(abs(slope - 2L * sp.nu) < rd("1e-8"));
}

TEST_CASE("radial function input guards") {
  DiracState st = DiracState::make(1, -1, rd("0.5"), ctx);
  CHECK_THROWS_AS(radial_FG(st, rd("0"), ctx), InvalidState);
  CHECK_THROWS_AS(radial_FG(st, rd("-1"), ctx), InvalidState);
}

TEST_CASE("divergent powers are rejected") {
  DiracState tight = DiracState::make(0, -1, rd("0.99"), ctx);
  CHECK_THROWS_AS(quadrature_triple(tight, -2, ctx), DivergentIntegral);
  // p = -1 still converges and matches the exact vector
  InitialVectors iv = initial_vectors(tight, ctx);
  MomentTriple q = quadrature_triple(tight, -1, ctx);
  CHECK(rel_diff(q.A, iv.v_m1.A) < qtol);
}

TEST_CASE("nonrelativistic oracle") {
  NonrelState h2 = NonrelState::make(2, 0, ctx);
  CHECK(rel_diff(quadrature_nonrel(h2, 0, ctx), Real::of(1L, ctx.bits)) < qtol);
  CHECK(rel_diff(quadrature_nonrel(h2, -1, ctx), Real::parse("0.25", ctx.bits)) < qtol);
  NonrelState p2 = NonrelState::make(2, 1, ctx);
  CHECK(rel_diff(quadrature_nonrel(p2, 1, ctx), Real::of(5L, ctx.bits)) < qtol);
  CHECK_THROWS_AS(quadrature_nonrel(NonrelState::make(1, 0, ctx), -3, ctx), DivergentIntegral);
}

TEST_CASE("nonrel radial function is normalized") {
  // crude Riemann check that R is the expected shape: R(a0) for 1s equals
  // 2 e^{-1} in units Z = a0 = 1
  NonrelState st = NonrelState::make(1, 0, ctx);
  Real got = nonrel_radial_R(st, rd("1"), ctx);
  Real want = 2L * exp(Real::of(-1L, ctx.bits));
  CHECK(rel_diff(got, want) < ctx.rel_tol);
}

TEST_CASE("quadrature self-consistency across precision") {
  // the same integral at 192 and 256 bits agrees to the coarser target
  PrecisionCtx lo = PrecisionCtx::standard(192);
  DiracState st_lo = DiracState::make(1, -2, rd("1.5", 192), lo);
  DiracState st_hi = DiracState::make(1, -2, rd("1.5", 256), ctx);
  MomentTriple a = quadrature_triple(st_lo, 2, lo);
  MomentTriple b = quadrature_triple(st_hi, 2, ctx);
  CHECK(rel_diff(a.A.rounded_to(256), b.A) < tol_digits(quadrature_digits(lo)));
}
