// Randomized cross-route consistency checks. A small xorshift generator with
// a fixed seed keeps runs reproducible; failures print the offending state.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>

#include "dcmom/closed_form.hpp"
#include "dcmom/hahn.hpp"
#include "dcmom/nonrel.hpp"
#include "dcmom/recurrences.hpp"
#include "helpers.hpp"

using namespace dcmom;
using dcmom::testing::rd;

static const PrecisionCtx ctx = PrecisionCtx::standard(256);

namespace {

struct Rng {
  uint64_t s = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  // uniform in (lo, hi), 9 decimal digits
  Real real(double lo, double hi) {
    double u = (next() >> 11) * 0x1.0p-53;
    double v = lo + (hi - lo) * (0.5e-9 + u * (1 - 1e-9));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return Real::parse(buf, ctx.bits);
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

DiracState random_state(Rng& rng) {
  int ak = rng.integer(1, 4);
  int n_r = rng.integer(0, 6);
  int kappa = rng.integer(0, 1) ? ak : -ak;
  if (n_r == 0) kappa = -ak;
  Real mu = rng.real(1e-3, 0.999 * ak);
  return DiracState::make(n_r, kappa, mu, ctx);
}

std::string describe(const DiracState& st) {
  return "n_r=" + std::to_string(st.n_r()) + " kappa=" + std::to_string(st.kappa()) +
         " mu=" + st.mu().str(10);
}

Real triple_dist(const MomentTriple& x, const MomentTriple& y) {
  return max(rel_diff(x.A, y.A), max(rel_diff(x.B, y.B), rel_diff(x.C, y.C)));
}

}  // namespace

TEST_CASE("random states: all routes track the closed form") {
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    DiracState st = random_state(rng);
    INFO(describe(st));
    std::vector<MomentTriple> ref = generate_table(st, -1, 6, Route::hahn_form, ctx);
    for (const MomentTriple& t : ref) {
      CHECK(indint1_residual(st, t, ctx) < rd("1e-60"));
      if (t.p >= -1) CHECK(t.A > 0L);
    }
    for (Route r : {Route::chebyshev_form, Route::recurrence_mat1, Route::recurrence_mat2,
                    Route::reduced_mat3, Route::reduced_mat4, Route::shabaev_up}) {
      std::vector<MomentTriple> col = generate_table(st, -1, 6, r, ctx);
      REQUIRE(col.size() == ref.size());
      for (size_t i = 0; i < col.size(); ++i) {
        CHECK(triple_dist(col[i], ref[i]) < rd("1e-50"));
      }
    }
    int p = rng.integer(1, 6);
    FactorizationReport fr = factorization_check(st, p, ctx);
    CHECK(fr.pass(rd("1e-50")));
  }
}

TEST_CASE("random hahn specs: series equals recurrence") {
  Rng rng;
  rng.s ^= 0xdeadbeef;
  for (int trial = 0; trial < 120; ++trial) {
    int m = rng.integer(0, 14);
    Real x = rng.real(-2.0, 9.0);
    Real N = rng.real(-8.0, -0.05);
    Real w = Real::of(static_cast<long>(rng.integer(0, 1)), ctx.bits);
    HahnSpec spec{w, w, m, x, N};
    INFO("m=" << m << " x=" << x.str(10) << " N=" << N.str(10));
    Real a = hahn_series(spec, ctx);
    Real b = hahn_recurrence(spec, ctx);
    CHECK(abs(a - b) <= rd("1e-60") * max(Real::of(1L, ctx.bits), abs(a)));
  }
}

TEST_CASE("random nonrel states: scaling, inversion, recurrence") {
  Rng rng;
  rng.s ^= 0xc0ffee;
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.integer(1, 7);
    int l = rng.integer(0, n - 1);
    Real Z = rng.real(0.3, 120.0);
    NonrelState st = NonrelState::make(n, l, Z, Real::of(1L, ctx.bits), ctx);
    NonrelState unit = NonrelState::make(n, l, ctx);
    INFO("n=" << n << " l=" << l << " Z=" << Z.str(10));
    int k = rng.integer(-2 - 2 * l, 8);
    Real scaled = moment_closed(st, k, ctx).value;
    Real base = moment_closed(unit, k, ctx).value;
    CHECK(rel_diff(scaled, base * pow_int(Z, -static_cast<long>(k))) < ctx.rel_tol);
    if (k >= 1) {
      Real prev = moment_closed(st, k - 1, ctx).value;
      Real prev2 = moment_closed(st, k - 2, ctx).value;
      CHECK(rel_diff(kp_step(st, k, prev, prev2, ctx), scaled) < ctx.rel_tol);
    }
    if (k <= -2) {
      Real pos = moment_closed(st, -k - 3, ctx).value;
      CHECK(rel_diff(inversion_map(st, -k - 2, pos, ctx), scaled) < ctx.rel_tol);
    }
  }
}
