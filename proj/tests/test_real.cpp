#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcmom/errors.hpp"
#include "dcmom/real.hpp"

using namespace dcmom;

TEST_CASE("construction and precision propagation") {
  Real a = Real::of(3L, 128);
  Real b = Real::of(7L, 256);
  CHECK(a.prec() == 128);
  CHECK((a + b).prec() == 256);
  CHECK((b / a).prec() == 256);
  CHECK((a * 2L).prec() == 128);
  CHECK((a + b).to_long() == 10);
}

TEST_CASE("parse and string round trip") {
  Real x = Real::parse("1.25e3", 128);
  CHECK(x == 1250L);
  CHECK(x.str(4) == "1.250e3");
  Real y = Real::parse(x.str(40), 128);
  CHECK(rel_diff(x, y).is_zero());
  CHECK(Real::parse("-0.5", 64).to_double() == -0.5);
  CHECK_THROWS_AS(Real::parse("1.2.3", 64), InvalidState);
  CHECK_THROWS_AS(Real::parse("pi", 64), InvalidState);
}

TEST_CASE("exact helpers") {
  CHECK(Real::pow2(-4, 64).to_double() == 0.0625);
  CHECK(Real::factorial(6, 64) == 720L);
  Real neg = -Real::of(5L, 64);
  CHECK(neg == -5L);
  CHECK(abs(neg) == 5L);
  CHECK(pow_int(Real::of(2L, 64), 10) == 1024L);
  CHECK(pow_int(Real::of(2L, 64), -1).to_double() == 0.5);
}

TEST_CASE("sqrt at high precision") {
  // sqrt(3)^2 - 3 stays at rounding level of the working precision
  Real r = sqrt(Real::of(3L, 256));
  Real resid = abs(r * r - 3L);
  CHECK(resid < Real::pow2(-250, 256));
  CHECK(resid < Real::parse("1e-75", 256));
}

TEST_CASE("comparisons against integers") {
  Real x = Real::parse("0.75", 64);
  CHECK(x < 1L);
  CHECK(x > 0L);
  CHECK(x != 1L);
  CHECK(Real::of(4L, 64) >= 4L);
}

TEST_CASE("rel_diff") {
  Real a = Real::parse("1000", 128);
  Real b = Real::parse("1001", 128);
  CHECK(rel_diff(a, b).to_double() == doctest::Approx(1.0 / 1001.0));
  CHECK(rel_diff(a, a).is_zero());
  CHECK(rel_diff(Real::of(0L, 64), Real::of(0L, 64)).is_zero());
}

TEST_CASE("precision context validation") {
  PrecisionCtx ctx = PrecisionCtx::standard(256);
  CHECK(ctx.bits == 256);
  CHECK(ctx.rel_tol == Real::pow2(-64, 256));
  CHECK(ctx.decimal_digits() == 78);
  CHECK(ctx.doubled().bits == 512);
  CHECK_THROWS_AS(PrecisionCtx::standard(32), InvalidState);
  CHECK_THROWS_AS(PrecisionCtx::with_tol(128, Real::of(2L, 64)), InvalidState);
  CHECK_THROWS_AS(PrecisionCtx::with_tol(128, Real::of(0L, 64)), InvalidState);
}

TEST_CASE("str handles specials") {
  Real z = Real::of(0L, 64);
  CHECK(z.str(10) == "0");
  Real nan(static_cast<mpfr_prec_t>(64));
  CHECK(nan.is_nan());
  CHECK(nan.str(10) == "nan");
}
