#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcmom/errors.hpp"
#include "dcmom/states.hpp"
#include "helpers.hpp"

using namespace dcmom;
using dcmom::testing::rd;
using dcmom::testing::state_grid;

static const PrecisionCtx ctx = PrecisionCtx::standard(256);

TEST_CASE("ground state parameters") {
  // n_r = 0, kappa = -1, mu = 1/2: nu = eps = sqrt(3)/2, a = 1/2
  DiracState st = DiracState::make(0, -1, rd("0.5"), ctx);
  Spectral sp = derive_parameters(st, ctx);
  Real root34 = sqrt(rd("0.75"));
  CHECK(rel_diff(sp.nu, root34) < ctx.rel_tol);
  CHECK(rel_diff(sp.eps, root34) < ctx.rel_tol);
  CHECK(rel_diff(sp.a, rd("0.5")) < ctx.rel_tol);
}

TEST_CASE("frozen spectral values") {
  DiracState st = DiracState::make(1, -1, rd("0.5"), ctx);
  Spectral sp = derive_parameters(st, ctx);
  CHECK(rel_diff(sp.nu, rd("0.86602540378443864676372317075293618347140262690519")) <
        dcmom::testing::tol_digits(49));
  CHECK(rel_diff(sp.eps, rd("0.96592582628906828674974319972889736763390483900840")) <
        dcmom::testing::tol_digits(49));
  CHECK(rel_diff(sp.a, rd("0.25881904510252076234889883762404832834906890131993")) <
        dcmom::testing::tol_digits(49));

  DiracState st2 = DiracState::make(2, 3, rd("1.2"), ctx);
  Spectral sp2 = derive_parameters(st2, ctx);
  CHECK(rel_diff(sp2.nu, rd("2.7495454169735040039528283162368050933906739460608")) <
        dcmom::testing::tol_digits(49));
  CHECK(rel_diff(sp2.eps, rd("0.96953362696984337122020257364884422849649217138307")) <
        dcmom::testing::tol_digits(49));
}

TEST_CASE("nonrelativistic limit") {
  // mu -> 0 at fixed kappa = -1, n_r = 1: eps -> 1, a -> 0
  DiracState st = DiracState::make(1, -1, rd("1e-8"), ctx);
  Spectral sp = derive_parameters(st, ctx);
  CHECK(abs(sp.eps - 1L) < rd("1e-15"));
  CHECK(sp.a < rd("1e-7"));
  CHECK(sp.a > 0L);
}

TEST_CASE("forbidden and malformed states") {
  CHECK_THROWS_AS(DiracState::make(0, 1, rd("0.1"), ctx), InvalidState);
  CHECK_THROWS_AS(DiracState::make(0, -1, rd("1.0"), ctx), InvalidState);   // mu = |kappa|
  CHECK_THROWS_AS(DiracState::make(0, -1, rd("1.5"), ctx), InvalidState);   // mu > |kappa|
  CHECK_THROWS_AS(DiracState::make(-1, -1, rd("0.5"), ctx), InvalidState);
  CHECK_THROWS_AS(DiracState::make(1, 0, rd("0.5"), ctx), InvalidState);
  CHECK_THROWS_AS(DiracState::make(1, -1, rd("-0.5"), ctx), InvalidState);
  CHECK_THROWS_AS(DiracState::make(1, -1, rd("0.5"), rd("0"), ctx), InvalidState);
}

TEST_CASE("from_charge") {
  Real alpha = rd(kDefaultAlphaFsc);
  DiracState st = DiracState::from_charge(1, -1, rd("92"), alpha, rd("1"), ctx);
  CHECK(rel_diff(st.mu(), rd("92") * alpha) < ctx.rel_tol);
  CHECK_THROWS_AS(DiracState::from_charge(1, -1, rd("-1"), alpha, rd("1"), ctx), InvalidState);
}

TEST_CASE("power range guard") {
  DiracState loose = DiracState::make(0, -1, rd("0.5"), ctx);  // nu ~ 0.866
  CHECK(validate_power_range(loose, -2, ctx));
  CHECK(validate_power_range(loose, 0, ctx));
  DiracState tight = DiracState::make(0, -1, rd("0.99"), ctx);  // nu ~ 0.141
  CHECK_FALSE(validate_power_range(tight, -2, ctx));
  CHECK(validate_power_range(tight, 0, ctx));
  CHECK(validate_power_range(tight, -1, ctx));  // p = -1 always converges (2nu > 0)
}

TEST_CASE("spectral invariants across the grid") {
  for (const DiracState& st : state_grid(ctx, 4, 3)) {
    Spectral sp = derive_parameters(st, ctx);
    Real kap2 = Real::of(static_cast<long>(st.kappa()) * st.kappa(), ctx.bits);
    CHECK(abs(sp.nu * sp.nu + st.mu() * st.mu() - kap2) < ctx.rel_tol * kap2);
    CHECK(abs(sp.a * sp.a + sp.eps * sp.eps - 1L) < ctx.rel_tol);
    Real rhs = st.mu() * sp.eps;
    CHECK(abs(sp.a * (sp.nu + static_cast<long>(st.n_r())) - rhs) < ctx.rel_tol * rhs);
    CHECK(sp.eps > 0L);
    CHECK(sp.eps < 1L);
    CHECK(sp.a > 0L);
    CHECK(sp.a < 1L);
  }
}

TEST_CASE("derivation is monotone in precision") {
  PrecisionCtx lo = PrecisionCtx::standard(128);
  PrecisionCtx hi = PrecisionCtx::standard(256);
  DiracState st_lo = DiracState::make(2, -2, rd("1.3", 128), lo);
  DiracState st_hi = DiracState::make(2, -2, rd("1.3", 256), hi);
  Spectral a = derive_parameters(st_lo, lo);
  Spectral b = derive_parameters(st_hi, hi);
  Real bound = Real::pow2(-120, 256);
  CHECK(rel_diff(a.nu.rounded_to(256), b.nu) < bound);
  CHECK(rel_diff(a.eps.rounded_to(256), b.eps) < bound);
  CHECK(rel_diff(a.a.rounded_to(256), b.a) < bound);
}

TEST_CASE("nonrel state validation") {
  CHECK_THROWS_AS(NonrelState::make(0, 0, ctx), InvalidState);
  CHECK_THROWS_AS(NonrelState::make(2, 2, ctx), InvalidState);
  CHECK_THROWS_AS(NonrelState::make(2, -1, ctx), InvalidState);
  CHECK_THROWS_AS(NonrelState::make(2, 0, rd("0"), rd("1"), ctx), InvalidState);
  NonrelState st = NonrelState::make(3, 1, ctx);
  CHECK(st.n() == 3);
  CHECK(st.l() == 1);
}
