// Python bindings. Values cross the boundary as decimal strings so the
// arbitrary-precision results survive intact; callers convert to float (or
// decimal.Decimal / mpmath) as needed.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcmom/closed_form.hpp"
#include "dcmom/errors.hpp"
#include "dcmom/hahn.hpp"
#include "dcmom/nonrel.hpp"
#include "dcmom/oracle.hpp"
#include "dcmom/recurrences.hpp"
#include "dcmom/verify.hpp"

namespace py = pybind11;
using namespace dcmom;

namespace {

PrecisionCtx ctx_of(int bits) { return PrecisionCtx::standard(bits); }

DiracState state_of(int n_r, int kappa, const std::string& mu, const std::string& beta,
                    const PrecisionCtx& ctx) {
  return DiracState::make(n_r, kappa, ctx.real(mu), ctx.real(beta), ctx);
}

py::dict triple_dict(const MomentTriple& t, int digits) {
  py::dict d;
  d["p"] = t.p;
  d["A"] = t.A.str(digits);
  d["B"] = t.B.str(digits);
  d["C"] = t.C.str(digits);
  d["route"] = route_name(t.route);
  return d;
}

Route route_of(const std::string& name) {
  auto r = route_from_name(name);
  if (!r) throw OutOfRange("unknown route: '" + name + "'");
  return *r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dirac-Coulomb radial expectation values, recurrences, and oracles";

  py::register_exception<InvalidState>(m, "InvalidStateError", PyExc_ValueError);
  py::register_exception<OutOfRange>(m, "OutOfRangeError", PyExc_ValueError);
  py::register_exception<DegenerateDenominator>(m, "DegenerateDenominatorError", PyExc_ValueError);
  py::register_exception<DegenerateCombination>(m, "DegenerateCombinationError", PyExc_ValueError);
  py::register_exception<DivergentIntegral>(m, "DivergentIntegralError", PyExc_ValueError);
  py::register_exception<QuadratureNonConvergence>(m, "QuadratureNonConvergenceError",
                                                   PyExc_ArithmeticError);
  py::register_exception<SingularMatrix>(m, "SingularMatrixError", PyExc_ArithmeticError);
  py::register_exception<IdentityViolation>(m, "IdentityViolationError", PyExc_ArithmeticError);

  m.def(
      "derive_parameters",
      [](int n_r, int kappa, const std::string& mu, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        DiracState st = state_of(n_r, kappa, mu, "1", ctx);
        Spectral sp = derive_parameters(st, ctx);
        int digits = ctx.decimal_digits();
        py::dict d;
        d["nu"] = sp.nu.str(digits);
        d["eps"] = sp.eps.str(digits);
        d["a"] = sp.a.str(digits);
        return d;
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("bits") = 256,
      "Spectral parameters (nu, eps, a) of a bound state.");

  m.def(
      "validate_power_range",
      [](int n_r, int kappa, const std::string& mu, int p, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        return validate_power_range(state_of(n_r, kappa, mu, "1", ctx), p, ctx);
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("p"), py::arg("bits") = 256);

  m.def(
      "hahn",
      [](const std::string& alpha, const std::string& beta, int mdeg, const std::string& x,
         const std::string& N, const std::string& method, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        HahnSpec spec{ctx.real(alpha), ctx.real(beta), mdeg, ctx.real(x), ctx.real(N)};
        Real v = method == "recurrence" ? hahn_recurrence(spec, ctx) : hahn_series(spec, ctx);
        return v.str(ctx.decimal_digits());
      },
      py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("x"), py::arg("N"),
      py::arg("method") = "series", py::arg("bits") = 256,
      "Hahn polynomial h_m^{(alpha,beta)}(x, N) by 'series' or 'recurrence'.");

  m.def(
      "chebyshev_t",
      [](int mdeg, const std::string& x, const std::string& N, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        return chebyshev_t(mdeg, ctx.real(x), ctx.real(N), ctx).str(ctx.decimal_digits());
      },
      py::arg("m"), py::arg("x"), py::arg("N"), py::arg("bits") = 256);

  m.def(
      "nonrel_moment",
      [](int n, int l, int power, const std::string& Z, const std::string& a0,
         const std::string& route, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        NonrelState st = NonrelState::make(n, l, ctx.real(Z), ctx.real(a0), ctx);
        if (route == "quadrature")
          return quadrature_nonrel(st, power, ctx).str(ctx.decimal_digits());
        NonrelRoute r = NonrelRoute::closed_form;
        if (route == "kp_recurrence")
          r = NonrelRoute::kp_recurrence;
        else if (route == "inversion")
          r = NonrelRoute::inversion;
        else if (route != "closed_form")
          throw OutOfRange("unknown nonrel route: '" + route + "'");
        auto rows = nonrel_table(st, power, power, r, ctx);
        if (rows.empty()) throw OutOfRange("route does not cover this power");
        return rows.front().value.str(ctx.decimal_digits());
      },
      py::arg("n"), py::arg("l"), py::arg("power"), py::arg("Z") = "1", py::arg("a0") = "1",
      py::arg("route") = "closed_form", py::arg("bits") = 256,
      "Hydrogenic <r^power> along one route.");

  m.def(
      "rel_triple",
      [](int n_r, int kappa, const std::string& mu, int p, const std::string& route,
         const std::string& beta, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        DiracState st = state_of(n_r, kappa, mu, beta, ctx);
        Route r = route_of(route);
        auto rows = generate_table(st, p, p, r, ctx);
        if (rows.empty()) throw OutOfRange("route does not cover this power");
        return triple_dict(rows.front(), ctx.decimal_digits());
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("p"),
      py::arg("route") = "hahn_form", py::arg("beta") = "1", py::arg("bits") = 256,
      "(A_p, B_p, C_p) for one state and power along one route.");

  m.def(
      "rel_table",
      [](int n_r, int kappa, const std::string& mu, int p_min, int p_max,
         const std::string& route, const std::string& beta, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        DiracState st = state_of(n_r, kappa, mu, beta, ctx);
        py::list out;
        for (const MomentTriple& t : generate_table(st, p_min, p_max, route_of(route), ctx))
          out.append(triple_dict(t, ctx.decimal_digits()));
        return out;
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("p_min"), py::arg("p_max"),
      py::arg("route") = "hahn_form", py::arg("beta") = "1", py::arg("bits") = 256);

  m.def(
      "initial_vectors",
      [](int n_r, int kappa, const std::string& mu, const std::string& beta, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        InitialVectors iv = initial_vectors(state_of(n_r, kappa, mu, beta, ctx), ctx);
        int digits = ctx.decimal_digits();
        py::dict d;
        d["-1"] = triple_dict(iv.v_m1, digits);
        d["0"] = triple_dict(iv.v_0, digits);
        d["1"] = triple_dict(iv.v_1, digits);
        return d;
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("beta") = "1",
      py::arg("bits") = 256);

  m.def(
      "indint1_residual",
      [](int n_r, int kappa, const std::string& mu, int p, const std::string& route, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        DiracState st = state_of(n_r, kappa, mu, "1", ctx);
        auto rows = generate_table(st, p, p, route_of(route), ctx);
        if (rows.empty()) throw OutOfRange("route does not cover this power");
        return indint1_residual(st, rows.front(), ctx).str(10);
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("p"),
      py::arg("route") = "hahn_form", py::arg("bits") = 256);

  m.def(
      "factorization_check",
      [](int n_r, int kappa, const std::string& mu, int p, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        FactorizationReport rep = factorization_check(state_of(n_r, kappa, mu, "1", ctx), p, ctx);
        py::dict d;
        d["p"] = rep.p;
        d["factor_residual"] = rep.factor_residual.str(10);
        d["det_residual"] = rep.det_residual.str(10);
        d["inverse_residual"] = rep.inverse_residual.str(10);
        d["pass"] = rep.pass(ctx.rel_tol);
        return d;
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("p"), py::arg("bits") = 256);

  m.def(
      "quadrature_triple",
      [](int n_r, int kappa, const std::string& mu, int p, const std::string& beta, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        return triple_dict(quadrature_triple(state_of(n_r, kappa, mu, beta, ctx), p, ctx),
                           ctx.decimal_digits());
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("p"), py::arg("beta") = "1",
      py::arg("bits") = 256, "Brute-force quadrature oracle for one triple.");

  m.def(
      "radial_fg",
      [](int n_r, int kappa, const std::string& mu, const std::string& r,
         const std::string& beta, int bits) {
        PrecisionCtx ctx = ctx_of(bits);
        RadialPair fg = radial_FG(state_of(n_r, kappa, mu, beta, ctx), ctx.real(r), ctx);
        int digits = ctx.decimal_digits();
        py::dict d;
        d["F"] = fg.F.str(digits);
        d["G"] = fg.G.str(digits);
        return d;
      },
      py::arg("n_r"), py::arg("kappa"), py::arg("mu"), py::arg("r"), py::arg("beta") = "1",
      py::arg("bits") = 256, "Normalized radial pair (F, G) at radius r.");

  m.def(
      "verify",
      [](int bits, int p_max, bool quadrature) {
        PrecisionCtx ctx = ctx_of(bits);
        VerifyOptions opt;
        opt.p_max = p_max;
        opt.with_quadrature = quadrature;
        VerifyReport rep = run_verify(opt, ctx);
        py::dict d;
        d["pass"] = rep.pass;
        d["bits"] = rep.bits;
        d["states_checked"] = rep.states_checked;
        d["skipped_divergent"] = rep.skipped_divergent;
        py::list ids;
        for (const IdentityStat& s : rep.identities) {
          py::dict e;
          e["name"] = s.name;
          e["max_residual"] = s.max_residual.str(10);
          e["tolerance"] = s.tolerance.str(6);
          e["checks"] = s.checks;
          e["pass"] = s.pass;
          ids.append(e);
        }
        d["identities"] = ids;
        return d;
      },
      py::arg("bits") = 128, py::arg("p_max") = 4, py::arg("quadrature") = false,
      "Run the identity verification harness over the default grid.");

  m.attr("__version__") = "0.1.0";
}
