// Command-line front end: moment tables for hydrogenlike ions (relativistic
// and nonrelativistic), Hahn polynomial evaluation, and the identity
// verification harness.
//
// Exit codes: 0 all checks passed, 2 invalid input, 3 identity violation,
// 4 numerical nonconvergence.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dcmom/emit.hpp"
#include "dcmom/errors.hpp"
#include "dcmom/hahn.hpp"
#include "dcmom/verify.hpp"

namespace {

using namespace dcmom;

struct CommonOpts {
  int bits = 256;
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--bits", o.bits, "working precision in bits (>= 64)")
      ->default_val(256);
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");
  cmd->add_option("--out", o.out_path, "write output to this file instead of stdout");
}

void write_out(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw InvalidState("cannot open output file: " + o.out_path);
  f << text;
}

std::vector<Route> parse_routes(const std::string& s) {
  std::vector<Route> routes;
  if (s == "all") {
    routes = {Route::hahn_form,   Route::chebyshev_form, Route::recurrence_mat1,
              Route::recurrence_mat2, Route::reduced_mat3, Route::reduced_mat4,
              Route::shabaev_up,  Route::shabaev_down,   Route::quadrature};
    return routes;
  }
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string name = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    auto r = route_from_name(name);
    if (!r) throw InvalidState("unknown route: '" + name + "'");
    routes.push_back(*r);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (routes.empty()) throw InvalidState("route list is empty");
  return routes;
}

std::vector<NonrelRoute> parse_nonrel_routes(const std::string& s) {
  if (s == "all")
    return {NonrelRoute::closed_form, NonrelRoute::kp_recurrence, NonrelRoute::inversion};
  std::vector<NonrelRoute> routes;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string name = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (name == "closed_form")
      routes.push_back(NonrelRoute::closed_form);
    else if (name == "kp_recurrence")
      routes.push_back(NonrelRoute::kp_recurrence);
    else if (name == "inversion")
      routes.push_back(NonrelRoute::inversion);
    else
      throw InvalidState("unknown nonrel route: '" + name + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (routes.empty()) throw InvalidState("route list is empty");
  return routes;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Dirac-Coulomb radial moment tables and identity checks"};
  app.require_subcommand(1);

  // ---- rel ----
  auto* rel = app.add_subcommand("rel", "relativistic moment triples (A_p, B_p, C_p)");
  CommonOpts rel_common;
  int nr = 0, kappa = -1, pmin = 0, pmax = 4;
  std::string mu_str, z_str, alpha_str = kDefaultAlphaFsc, beta_str = "1", routes_str = "all";
  rel->add_option("--nr", nr, "radial quantum number n_r")->required();
  rel->add_option("--kappa", kappa, "angular quantum number kappa (nonzero)")->required();
  auto* muopt = rel->add_option("--mu", mu_str, "Coulomb coupling mu = alpha Z, 0 < mu < |kappa|");
  auto* zopt = rel->add_option("--Z", z_str, "nuclear charge (mu = Z * alpha)");
  muopt->excludes(zopt);
  rel->add_option("--alpha-fsc", alpha_str, "fine-structure constant used with --Z");
  rel->add_option("--beta", beta_str, "inverse length scale beta = mc/hbar");
  rel->add_option("--pmin", pmin, "lowest power")->default_val(0);
  rel->add_option("--pmax", pmax, "highest power")->default_val(4);
  rel->add_option("--routes", routes_str, "comma list of routes, or 'all'")->default_val("all");
  add_common(rel, rel_common);

  // ---- nonrel ----
  auto* nonrel = app.add_subcommand("nonrel", "nonrelativistic hydrogenic <r^k>");
  CommonOpts non_common;
  int nn = 1, ll = 0, kmin = -1, kmax = 4;
  std::string nz_str = "1", a0_str = "1", nroutes_str = "all";
  nonrel->add_option("--n", nn, "principal quantum number")->required();
  nonrel->add_option("--l", ll, "orbital quantum number");
  nonrel->add_option("--Z", nz_str, "nuclear charge")->default_val("1");
  nonrel->add_option("--a0", a0_str, "Bohr radius")->default_val("1");
  nonrel->add_option("--kmin", kmin, "lowest power")->default_val(-1);
  nonrel->add_option("--kmax", kmax, "highest power")->default_val(4);
  nonrel->add_option("--routes", nroutes_str, "closed_form,kp_recurrence,inversion or 'all'")
      ->default_val("all");
  add_common(nonrel, non_common);

  // ---- hahn ----
  auto* hahn = app.add_subcommand("hahn", "evaluate h_m^{(alpha,beta)}(x, N) on both paths");
  CommonOpts hahn_common;
  int hm = 0;
  std::string ha = "0", hb = "0", hx = "0", hN = "-1";
  hahn->add_option("--alpha", ha, "weight exponent alpha")->default_val("0");
  hahn->add_option("--beta", hb, "weight exponent beta")->default_val("0");
  hahn->add_option("--m", hm, "degree")->required();
  hahn->add_option("--x", hx, "argument")->required();
  hahn->add_option("--N", hN, "lattice parameter")->required();
  add_common(hahn, hahn_common);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the identity verification harness");
  CommonOpts ver_common;
  int ver_pmax = 6, quad_pmin = -1, quad_pmax = 3;
  bool with_quad = false;
  std::string mu_fracs = "0.1,0.5,0.9";
  verify->add_option("--pmax", ver_pmax, "highest power in the route checks")->default_val(6);
  verify->add_flag("--quad", with_quad, "include the quadrature oracle comparisons");
  verify->add_option("--quad-pmin", quad_pmin, "lowest power for the quadrature checks")
      ->default_val(-1);
  verify->add_option("--quad-pmax", quad_pmax, "highest power for the quadrature checks")
      ->default_val(3);
  verify->add_option("--mu-fracs", mu_fracs, "grid of mu as fractions of |kappa|")
      ->default_val("0.1,0.5,0.9");
  add_common(verify, ver_common);  // verify output is always the JSON report

  CLI11_PARSE(app, argc, argv);

  if (rel->parsed()) {
    if (mu_str.empty() && z_str.empty())
      throw InvalidState("one of --mu or --Z is required");
    PrecisionCtx ctx = PrecisionCtx::standard(rel_common.bits);
    Real beta = ctx.real(beta_str);
    DiracState state =
        !z_str.empty()
            ? DiracState::from_charge(nr, kappa, ctx.real(z_str), ctx.real(alpha_str), beta, ctx)
            : DiracState::make(nr, kappa, ctx.real(mu_str), beta, ctx);
    RelTable table = build_rel_table(state, pmin, pmax, parse_routes(routes_str), ctx);
    write_out(rel_common, rel_common.format == "json" ? rel_json(table) : rel_csv(table));
    return 0;
  }
  if (nonrel->parsed()) {
    PrecisionCtx ctx = PrecisionCtx::standard(non_common.bits);
    NonrelState state = NonrelState::make(nn, ll, ctx.real(nz_str), ctx.real(a0_str), ctx);
    NonrelTable table =
        build_nonrel_table(state, kmin, kmax, parse_nonrel_routes(nroutes_str), ctx);
    write_out(non_common, non_common.format == "json" ? nonrel_json(table) : nonrel_csv(table));
    return 0;
  }
  if (hahn->parsed()) {
    PrecisionCtx ctx = PrecisionCtx::standard(hahn_common.bits);
    HahnSpec spec{ctx.real(ha), ctx.real(hb), hm, ctx.real(hx), ctx.real(hN)};
    Real series = hahn_series(spec, ctx);
    Real rec = hahn_recurrence(spec, ctx);
    int digits = ctx.decimal_digits();
    std::string text;
    if (hahn_common.format == "json") {
      text = std::string("{\n  \"series\": \"") + series.str(digits) + "\",\n  \"recurrence\": \"" +
             rec.str(digits) + "\",\n  \"rel_diff\": \"" + rel_diff(series, rec).str(6) + "\"\n}\n";
    } else {
      text = "path,value\nseries," + series.str(digits) + "\nrecurrence," + rec.str(digits) +
             "\nrel_diff," + rel_diff(series, rec).str(6) + "\n";
    }
    write_out(hahn_common, text);
    return 0;
  }
  if (verify->parsed()) {
    PrecisionCtx ctx = PrecisionCtx::standard(ver_common.bits);
    VerifyOptions opt;
    opt.p_max = ver_pmax;
    opt.with_quadrature = with_quad;
    opt.quad_p_min = quad_pmin;
    opt.quad_p_max = quad_pmax;
    opt.mu_fractions.clear();
    size_t pos = 0;
    while (pos <= mu_fracs.size()) {
      size_t comma = mu_fracs.find(',', pos);
      opt.mu_fractions.push_back(
          mu_fracs.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    VerifyReport report = run_verify(opt, ctx);
    write_out(ver_common, report.to_json(10));
    return report.pass ? 0 : 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return 3;
  } catch (const QuadratureNonConvergence& e) {
    std::cerr << "nonconvergence: " << e.what() << "\n";
    return 4;
  } catch (const SingularMatrix& e) {
    std::cerr << "nonconvergence: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
