#include "dcmom/nonrel.hpp"

#include <string>

#include "dcmom/errors.hpp"
#include "dcmom/hahn.hpp"

namespace dcmom {

const char* nonrel_route_name(NonrelRoute r) {
  switch (r) {
    case NonrelRoute::closed_form: return "closed_form";
    case NonrelRoute::inversion: return "inversion";
    case NonrelRoute::kp_recurrence: return "kp_recurrence";
  }
  return "?";
}

namespace {

Real cheb_arg(const NonrelState& s, int k, const PrecisionCtx& ctx) {
  Real x = Real::of(static_cast<long>(s.n() - s.l() - 1), ctx.bits);
  Real N = Real::of(static_cast<long>(-2 * s.l() - 1), ctx.bits);
  return chebyshev_t(k, x, N, ctx);
}

// (2l-k)! / (2l+k+1)! as 1 / prod_{j=2l-k+1}^{2l+k+1} j.
Real factorial_ratio(int l, int k, const PrecisionCtx& ctx) {
  Real denom = Real::of(1L, ctx.bits);
  for (long j = 2L * l - k + 1; j <= 2L * l + k + 1; ++j) denom = denom * j;
  return 1L / denom;
}

}  // namespace

NonrelMoment moment_closed(const NonrelState& state, int power, const PrecisionCtx& ctx) {
  const long n = state.n();
  const Real scale = (state.Z() * 2L) / (state.a0() * n);  // 2Z / (n a0)
  if (power >= -1) {
    const int k = power + 1;
    Real t = cheb_arg(state, k, ctx);
    Real val = pow_int(scale, -static_cast<long>(power)) * t / (2L * n);
    return NonrelMoment{power, std::move(val), NonrelRoute::closed_form};
  }
  const int k = -power - 2;
  if (k > 2 * state.l())
    throw OutOfRange("negative-branch closed form requires k <= 2l (k = " + std::to_string(k) +
                     ", l = " + std::to_string(state.l()) + ")");
  Real t = cheb_arg(state, k, ctx);
  Real val = pow_int(scale, k + 2) * factorial_ratio(state.l(), k, ctx) * t / (2L * n);
  return NonrelMoment{power, std::move(val), NonrelRoute::closed_form};
}

Real kp_step(const NonrelState& state, int k, const Real& prev, const Real& prev2,
             const PrecisionCtx& ctx) {
  const long n = state.n();
  const long l = state.l();
  const Real half_scale = (state.a0() * n) / (state.Z() * 2L);  // n a0 / 2Z
  Real first = (Real::of(2 * n * (2L * k + 1), ctx.bits) / (k + 1)) * half_scale * prev;
  Real second = (Real::of(k * ((2 * l + 1) * (2 * l + 1) - static_cast<long>(k) * k), ctx.bits) /
                 (k + 1)) *
                half_scale * half_scale * prev2;
  return first - second;
}

Real inversion_map(const NonrelState& state, int k, const Real& pos, const PrecisionCtx& ctx) {
  if (k < 0 || k > 2 * state.l())
    throw OutOfRange("inversion requires 0 <= k <= 2l (k = " + std::to_string(k) + ")");
  const Real scale = (state.Z() * 2L) / (state.a0() * state.n());
  return pow_int(scale, 2L * k + 1) * factorial_ratio(state.l(), k, ctx) * pos;
}

std::vector<NonrelMoment> nonrel_table(const NonrelState& state, int kmin, int kmax,
                                       NonrelRoute route, const PrecisionCtx& ctx) {
  if (kmin > kmax) throw OutOfRange("kmin must not exceed kmax");
  std::vector<NonrelMoment> out;
  switch (route) {
    case NonrelRoute::closed_form: {
      for (int p = kmin; p <= kmax; ++p) {
        if (p < -2 - 2 * state.l()) continue;
        out.push_back(moment_closed(state, p, ctx));
      }
      break;
    }
    case NonrelRoute::kp_recurrence: {
      // initial pair <1/r>, <1> at powers -1 and 0, then upward steps
      Real prev = state.Z() / (state.a0() * static_cast<long>(state.n()) *
                               static_cast<long>(state.n()));
      Real cur = Real::of(1L, ctx.bits);
      if (kmin <= -1 && kmax >= -1)
        out.push_back(NonrelMoment{-1, prev, NonrelRoute::kp_recurrence});
      if (kmax >= 0) {
        if (kmin <= 0) out.push_back(NonrelMoment{0, cur, NonrelRoute::kp_recurrence});
        for (int k = 1; k <= kmax; ++k) {
          Real next = kp_step(state, k, cur, prev, ctx);
          prev = std::move(cur);
          cur = std::move(next);
          if (k >= kmin) out.push_back(NonrelMoment{k, cur, NonrelRoute::kp_recurrence});
        }
      }
      break;
    }
    case NonrelRoute::inversion: {
      for (int p = kmin; p <= kmax; ++p) {
        if (p > -2 || p < -2 - 2 * state.l()) continue;
        const int k = -p - 2;
        Real pos = moment_closed(state, k - 1, ctx).value;
        out.push_back(NonrelMoment{p, inversion_map(state, k, pos, ctx),
                                   NonrelRoute::inversion});
      }
      break;
    }
  }
  return out;
}

}  // namespace dcmom
