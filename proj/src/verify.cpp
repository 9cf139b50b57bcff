#include "dcmom/verify.hpp"

#include <json.hpp>

#include "dcmom/closed_form.hpp"
#include "dcmom/errors.hpp"
#include "dcmom/hahn.hpp"
#include "dcmom/nonrel.hpp"
#include "dcmom/oracle.hpp"
#include "dcmom/recurrences.hpp"

namespace dcmom {

namespace {

struct StatAcc {
  Real worst;
  long checks = 0;
  explicit StatAcc(int bits) : worst(Real::of(0L, bits)) {}
  void add(const Real& r) {
    worst = max(worst, r);
    ++checks;
  }
};

Real triple_dist(const MomentTriple& x, const MomentTriple& y) {
  return max(rel_diff(x.A, y.A), max(rel_diff(x.B, y.B), rel_diff(x.C, y.C)));
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt, const PrecisionCtx& ctx) {
  const int bits = ctx.bits;
  VerifyReport report;
  report.bits = bits;

  StatAcc s_in0(bits), s_dual(bits), s_ind(bits), s_mat1(bits), s_mat2(bits), s_mat3(bits),
      s_mat4(bits), s_shab(bits), s_detP(bits), s_detQ(bits), s_factor(bits), s_dets(bits),
      s_updown(bits), s_mix(bits), s_hahn(bits), s_nonrel(bits), s_qrel(bits), s_qnon(bits);

  const Real quad_tol =
      Real::parse("1e-" + std::to_string(quadrature_digits(ctx) - 2), bits);

  for (int n_r : opt.n_r_values) {
    for (int kap : opt.kappa_values) {
      if (n_r == 0 && kap > 0) continue;
      for (const std::string& frac : opt.mu_fractions) {
        Real mu = Real::parse(frac, bits) * std::abs(static_cast<long>(kap));
        DiracState st = DiracState::make(n_r, kap, mu, ctx);
        Spectral sp = derive_parameters(st, ctx);
        ++report.states_checked;

        // closed form at p = 0 against the exact initial vector
        InitialVectors iv = initial_vectors(st, ctx);
        MomentTriple t0 = triple_hahn(st, 0, ctx);
        s_in0.add(triple_dist(t0, iv.v_0));

        // reference column from the Hahn closed form (one extra power for
        // the combined-recurrence check below)
        std::vector<MomentTriple> ref =
            generate_table(st, -1, opt.p_max + 1, Route::hahn_form, ctx);
        for (const MomentTriple& t : ref) s_ind.add(indint1_residual(st, t, ctx));
        auto ref_at = [&](int p) -> const MomentTriple& {
          return ref[static_cast<size_t>(p + 1)];
        };

        for (int p = 1; p <= opt.p_max; ++p)
          s_dual.add(triple_dist(triple_chebyshev(st, p, ctx), ref_at(p)));

        auto compare_route = [&](Route r, StatAcc& acc) {
          std::vector<MomentTriple> col = generate_table(st, -1, opt.p_max, r, ctx);
          for (const MomentTriple& t : col) acc.add(triple_dist(t, ref_at(t.p)));
        };
        compare_route(Route::recurrence_mat1, s_mat1);
        compare_route(Route::recurrence_mat2, s_mat2);
        compare_route(Route::reduced_mat3, s_mat3);
        compare_route(Route::reduced_mat4, s_mat4);
        compare_route(Route::shabaev_up, s_shab);

        for (int p = 1; p <= opt.p_max; ++p) {
          PQPair pq = build_PQ(st, p, ctx);
          s_detP.add(rel_diff(pq.detP, detP_formula(st, p, ctx)));
          s_detQ.add(rel_diff(pq.detQ, detQ_formula(st, p, ctx)));
          FactorizationReport fr = factorization_check(st, p, ctx);
          s_factor.add(fr.factor_residual);
          s_factor.add(fr.inverse_residual);
          s_dets.add(fr.det_residual);

          // up then down must return on the closed-form pair
          const MomentTriple& t = ref_at(p);
          MomentPair up = shabaev_up(st, p, t.A, t.B, ctx);
          MomentPair back = shabaev_down(st, p + 1, up.A, up.B, ctx);
          s_updown.add(max(rel_diff(back.A, t.A), rel_diff(back.B, t.B)));

          // an arbitrary scalar mix of the reduced recurrences must still
          // propagate the closed-form values
          StepOperator2 mix =
              combine_recurrences(Real::of(2L, bits), Real::of(3L, bits),
                                  mat3_operator(st, p, ctx), mat4_operator(st, p, ctx));
          const MomentTriple& tm = ref_at(p - 1);
          const MomentTriple& tw = ref_at(p + 1);
          auto dv = mix.D.apply(t.A, t.B);
          auto ev = mix.E.apply(tm.A, tm.B);
          s_mix.add(rel_diff((dv[0] + ev[0]) / mix.lhs, tw.A));
          s_mix.add(rel_diff((dv[1] + ev[1]) / mix.lhs, tw.B));
        }

        // quadrature oracle (heavier; restricted grid)
        if (opt.with_quadrature && n_r <= 2) {
          DiracQuadrature quad(st, ctx, opt.quad_p_max);
          for (int p = opt.quad_p_min; p <= opt.quad_p_max; ++p) {
            if (!validate_power_range(st, p, ctx)) {
              ++report.skipped_divergent;
              continue;
            }
            MomentTriple q = quad.triple(p);
            if (p >= 0) {
              s_qrel.add(triple_dist(q, ref_at(p)));
            } else {
              s_qrel.add(triple_dist(q, iv.v_m1));
            }
          }
        }
      }
    }
  }

  // Hahn polynomial evaluation-path equivalence on the module grid.
  {
    Real numax = Real::parse("0.75", bits);
    for (int im = 0; im <= 12; im += 3) {
      for (int ix = 0; ix <= 8; ix += 2) {
        for (int pair = 0; pair < 2; ++pair) {
          Real ab = Real::of(pair == 0 ? 0L : 1L, bits);
          for (int nn = 0; nn < 3; ++nn) {
            Real N = nn == 2 ? Real::of(-3L, bits) : -1L - 2L * sqrt(numax + nn);
            HahnSpec spec{ab, ab, im, Real::of(static_cast<long>(ix), bits), N};
            Real a = hahn_series(spec, ctx);
            Real b = hahn_recurrence(spec, ctx);
            s_hahn.add(rel_diff(a, b));
          }
        }
      }
    }
  }

  // Nonrelativistic route agreement.
  {
    for (int n = 1; n <= 6; ++n) {
      for (int l = 0; l < n; ++l) {
        NonrelState st = NonrelState::make(n, l, ctx);
        auto closed = nonrel_table(st, -2 - 2 * l, opt.p_max, NonrelRoute::closed_form, ctx);
        auto kp = nonrel_table(st, -1, opt.p_max, NonrelRoute::kp_recurrence, ctx);
        auto inv = nonrel_table(st, -2 - 2 * l, -2, NonrelRoute::inversion, ctx);
        auto find_closed = [&](int k) -> const Real& {
          for (const auto& m : closed)
            if (m.k == k) return m.value;
          throw OutOfRange("missing closed-form moment");
        };
        for (const auto& m : kp) s_nonrel.add(rel_diff(m.value, find_closed(m.k)));
        for (const auto& m : inv) s_nonrel.add(rel_diff(m.value, find_closed(m.k)));
        if (opt.with_quadrature && n <= 3) {
          NonrelQuadrature quad(st, ctx, 3);
          for (int k = -1; k <= 2; ++k)
            s_qnon.add(rel_diff(quad.moment(k), find_closed(k)));
        }
      }
    }
  }

  auto push = [&](const std::string& name, const StatAcc& acc, const Real& tol) {
    IdentityStat st{name, acc.worst, tol, acc.worst <= tol, acc.checks};
    report.identities.push_back(std::move(st));
  };
  const Real& tol = ctx.rel_tol;
  push("initial_vector_p0", s_in0, tol);
  push("dual_representation", s_dual, tol);
  push("linear_dependence", s_ind, tol);
  push("route_mat1", s_mat1, tol);
  push("route_mat2", s_mat2, tol);
  push("route_mat3", s_mat3, tol);
  push("route_mat4", s_mat4, tol);
  push("route_shabaev", s_shab, tol);
  push("det_P", s_detP, tol);
  push("det_Q", s_detQ, tol);
  push("factorization", s_factor, tol);
  push("det_S", s_dets, tol);
  push("up_down_identity", s_updown, tol);
  push("combined_recurrence", s_mix, tol);
  push("hahn_series_vs_recurrence", s_hahn, tol);
  push("nonrel_routes", s_nonrel, tol);
  if (opt.with_quadrature) {
    push("quadrature_rel", s_qrel, quad_tol);
    push("quadrature_nonrel", s_qnon, quad_tol);
  }

  report.pass = true;
  for (const IdentityStat& s : report.identities)
    if (!s.pass) report.pass = false;
  return report;
}

std::string VerifyReport::to_json(int digits) const {
  nlohmann::ordered_json root;
  root["bits"] = bits;
  root["states_checked"] = states_checked;
  root["skipped_divergent"] = skipped_divergent;
  root["pass"] = pass;
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (const IdentityStat& s : identities) {
    ids.push_back({{"name", s.name},
                   {"max_residual", s.max_residual.str(digits)},
                   {"tolerance", s.tolerance.str(6)},
                   {"checks", s.checks},
                   {"pass", s.pass}});
  }
  root["identities"] = ids;
  return root.dump(2) + "\n";
}

}  // namespace dcmom
