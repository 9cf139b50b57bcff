#pragma once

#include <optional>
#include <string_view>

#include "dcmom/real.hpp"
#include "dcmom/states.hpp"

namespace dcmom {

// Evaluation route of a relativistic moment triple.
enum class Route {
  hahn_form,
  chebyshev_form,
  recurrence_mat1,
  recurrence_mat2,
  reduced_mat3,
  reduced_mat4,
  shabaev_up,
  shabaev_down,
  quadrature,
};

const char* route_name(Route r);
std::optional<Route> route_from_name(std::string_view name);

// The value triple (A_p, B_p, C_p) at integer power p:
//   A_p = int r^{p+2} (F^2 + G^2) dr,
//   B_p = int r^{p+2} (F^2 - G^2) dr,
//   C_p = int r^{p+2} F G dr.
struct MomentTriple {
  int p = 0;
  Real A;
  Real B;
  Real C;
  Route route = Route::hahn_form;
};

// Relative residual of the linear dependence
//   (2 kappa + eps (p+1)) A_p - (2 eps kappa + p+1) B_p = 4 mu C_p,
// scaled by the largest of the three terms.
Real indint1_residual(const DiracState& state, const MomentTriple& t, const PrecisionCtx& ctx);

// C_p recovered from (A_p, B_p) through the same linear dependence.
Real c_from_ab(const DiracState& state, int p, const Real& A, const Real& B,
               const PrecisionCtx& ctx);

}  // namespace dcmom
