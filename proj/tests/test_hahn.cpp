#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcmom/errors.hpp"
#include "dcmom/hahn.hpp"
#include "helpers.hpp"

using namespace dcmom;
using dcmom::testing::rd;
using dcmom::testing::tol_digits;

static const PrecisionCtx ctx = PrecisionCtx::standard(256);

namespace {
HahnSpec spec00(int m, const Real& x, const Real& N) {
  Real z = Real::of(0L, ctx.bits);
  return HahnSpec{z, z, m, x, N};
}
HahnSpec spec11(int m, const Real& x, const Real& N) {
  Real o = Real::of(1L, ctx.bits);
  return HahnSpec{o, o, m, x, N};
}
}  // namespace

TEST_CASE("degree zero is exactly one") {
  CHECK(hahn_series(spec00(0, rd("4.2"), rd("-3.1")), ctx) == 1L);
  CHECK(hahn_recurrence(spec00(0, rd("4.2"), rd("-3.1")), ctx) == 1L);
  CHECK(hahn_series(spec11(0, rd("-1"), rd("-0.7")), ctx) == 1L);
}

TEST_CASE("degree one closed form 2x - N + 1") {
  CHECK(hahn_series(spec00(1, rd("3"), rd("5")), ctx) == 2L);
  CHECK(hahn_recurrence(spec00(1, rd("3"), rd("5")), ctx) == 2L);
  // t_1(n-l-1, -2l-1) = 2n for hydrogenic arguments
  for (long n = 1; n <= 5; ++n) {
    for (long l = 0; l < n; ++l) {
      Real t1 = chebyshev_t(1, Real::of(n - l - 1, ctx.bits),
                            Real::of(-2 * l - 1, ctx.bits), ctx);
      CHECK(t1 == 2 * n);
    }
  }
}

TEST_CASE("frozen reference values") {
  Real N075 = -1L - 2L * sqrt(rd("0.75"));
  CHECK(rel_diff(hahn_series(spec00(4, rd("2"), N075), ctx),
                 rd("14931.505881682835752100735239186408952253744848540")) < tol_digits(48));
  CHECK(rel_diff(hahn_series(spec11(5, rd("3"), N075), ctx),
                 rd("2391013.6984512504467447511081329236714821413910151")) < tol_digits(48));
  CHECK(chebyshev_t(3, rd("2"), rd("-7"), ctx) == 3480L);
}

TEST_CASE("recurrence coefficients") {
  // (0,0), m=1: alpha_1 = 2*2/(3*4) = 1/3, gamma_1 = (N^2-1)/6
  Real N = rd("-4.5");
  RecurrenceCoeffs c = coeffs(spec00(1, rd("0"), N), ctx);
  CHECK(rel_diff(c.alpha_m, Real::of(1L, ctx.bits) / 3L) < ctx.rel_tol);
  CHECK(rel_diff(c.gamma_m, (N * N - 1L) / 6L) < ctx.rel_tol);
  // (1,1), m=0: alpha_0 = 1*3/(3*4) = 1/4
  RecurrenceCoeffs c11 = coeffs(spec11(0, rd("0"), N), ctx);
  CHECK(rel_diff(c11.alpha_m, Real::of(1L, ctx.bits) / 4L) < ctx.rel_tol);
  // gamma_0 multiplies h_{-1} = 0 and its (0,0) numerator vanishes
  RecurrenceCoeffs c0 = coeffs(spec00(0, rd("0"), N), ctx);
  CHECK(c0.gamma_m.is_zero());
}

TEST_CASE("series and recurrence agree over the module grid") {
  std::vector<Real> Ns;
  for (const char* nus : {"0.141", "0.75", "0.99", "1.94", "2.8"})
    Ns.push_back(-1L - 2L * rd(nus));
  for (long N = -1; N >= -5; --N) Ns.push_back(Real::of(N, ctx.bits));
  Real tol = Real::parse("1e-60", ctx.bits);
  for (int m = 0; m <= 12; ++m) {
    for (int x = 0; x <= 8; ++x) {
      for (const Real& N : Ns) {
        for (int w = 0; w < 2; ++w) {
          HahnSpec s = w == 0 ? spec00(m, Real::of(static_cast<long>(x), ctx.bits), N)
                              : spec11(m, Real::of(static_cast<long>(x), ctx.bits), N);
          Real a = hahn_series(s, ctx);
          Real b = hahn_recurrence(s, ctx);
          CHECK(abs(a - b) <= tol * max(Real::of(1L, ctx.bits), abs(a)));
        }
      }
    }
  }
}

TEST_CASE("real non-integer arguments agree on both paths") {
  // x = -1 shows up through the closed forms at n_r = 0
  for (const char* xs : {"-1", "0.5", "3.25"}) {
    HahnSpec s = spec11(6, rd(xs), -1L - 2L * sqrt(rd("3.19")));
    CHECK(rel_diff(hahn_series(s, ctx), hahn_recurrence(s, ctx)) < rd("1e-60"));
  }
}

TEST_CASE("polynomiality in x") {
  // second finite difference of a degree-2 polynomial is constant
  Real N = rd("-3.7");
  auto h2 = [&](long x) { return hahn_series(spec00(2, Real::of(x, ctx.bits), N), ctx); };
  Real d2a = h2(2) - 2L * h2(1) + h2(0);
  Real d2b = h2(7) - 2L * h2(6) + h2(5);
  CHECK(rel_diff(d2a, d2b) < ctx.rel_tol);
}

TEST_CASE("degenerate denominator guards") {
  // 1 - N + j = 0 inside the series range
  CHECK_THROWS_AS(hahn_series(spec00(5, rd("0.5"), rd("3")), ctx), DegenerateDenominator);
  // alpha + beta + 2m + 1 = 0 in the coefficients
  HahnSpec bad{rd("-1"), rd("0"), 0, rd("1"), rd("-2")};
  CHECK_THROWS_AS(coeffs(bad, ctx), DegenerateDenominator);
  CHECK_THROWS_AS(hahn_series(spec00(-1, rd("0"), rd("-2")), ctx), OutOfRange);
}
