#include "dcmom/moments.hpp"

namespace dcmom {

const char* route_name(Route r) {
  switch (r) {
    case Route::hahn_form: return "hahn_form";
    case Route::chebyshev_form: return "chebyshev_form";
    case Route::recurrence_mat1: return "recurrence_mat1";
    case Route::recurrence_mat2: return "recurrence_mat2";
    case Route::reduced_mat3: return "reduced_mat3";
    case Route::reduced_mat4: return "reduced_mat4";
    case Route::shabaev_up: return "shabaev_up";
    case Route::shabaev_down: return "shabaev_down";
    case Route::quadrature: return "quadrature";
  }
  return "?";
}

std::optional<Route> route_from_name(std::string_view name) {
  for (Route r : {Route::hahn_form, Route::chebyshev_form, Route::recurrence_mat1,
                  Route::recurrence_mat2, Route::reduced_mat3, Route::reduced_mat4,
                  Route::shabaev_up, Route::shabaev_down, Route::quadrature}) {
    if (name == route_name(r)) return r;
  }
  return std::nullopt;
}

Real indint1_residual(const DiracState& state, const MomentTriple& t, const PrecisionCtx& ctx) {
  Spectral sp = derive_parameters(state, ctx);
  const long kap = state.kappa();
  Real tA = (2L * kap + sp.eps * (t.p + 1)) * t.A;
  Real tB = (2L * kap * sp.eps + (t.p + 1)) * t.B;
  Real tC = 4L * state.mu() * t.C;
  Real resid = abs(tA - tB - tC);
  Real scale = max(abs(tA), max(abs(tB), abs(tC)));
  if (scale.is_zero()) return resid;
  return resid / scale;
}

Real c_from_ab(const DiracState& state, int p, const Real& A, const Real& B,
               const PrecisionCtx& ctx) {
  Spectral sp = derive_parameters(state, ctx);
  const long kap = state.kappa();
  return ((2L * kap + sp.eps * (p + 1)) * A - (2L * kap * sp.eps + (p + 1)) * B) /
         (4L * state.mu());
}

}  // namespace dcmom
