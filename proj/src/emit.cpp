#include "dcmom/emit.hpp"

#include <json.hpp>

#include "dcmom/recurrences.hpp"

namespace dcmom {

using nlohmann::ordered_json;

RelTable build_rel_table(const DiracState& state, int p_min, int p_max,
                         const std::vector<Route>& routes, const PrecisionCtx& ctx) {
  RelTable table;
  table.digits = ctx.decimal_digits();
  table.state_desc = {
      {"n_r", std::to_string(state.n_r())},
      {"kappa", std::to_string(state.kappa())},
      {"mu", state.mu().str(table.digits)},
      {"beta", state.beta_scale().str(table.digits)},
      {"bits", std::to_string(ctx.bits)},
  };
  for (Route route : routes) {
    // Routes simply skip the part of the range they cannot reach; the
    // convergence guard still applies to what they do emit.
    int lo = p_min;
    if (route != Route::shabaev_down && route != Route::quadrature && lo < -1) lo = -1;
    int hi = p_max;
    if (route == Route::shabaev_down && hi > 1) hi = 1;
    if (lo > hi) continue;
    while (!validate_power_range(state, lo, ctx) && lo <= hi) ++lo;
    if (lo > hi) continue;
    std::vector<MomentTriple> col = generate_table(state, lo, hi, route, ctx);
    for (MomentTriple& t : col) {
      Real resid = indint1_residual(state, t, ctx);
      int p = t.p;
      table.rows[p].push_back(RelCell{route, std::move(t), std::move(resid)});
    }
  }
  return table;
}

std::string rel_csv(const RelTable& table) {
  std::string out = "p,route,A,B,C,indint1_residual\n";
  for (const auto& [p, cells] : table.rows) {
    for (const RelCell& c : cells) {
      out += std::to_string(p);
      out += ',';
      out += route_name(c.route);
      out += ',';
      out += c.triple.A.str(table.digits);
      out += ',';
      out += c.triple.B.str(table.digits);
      out += ',';
      out += c.triple.C.str(table.digits);
      out += ',';
      out += c.residual.str(6);
      out += '\n';
    }
  }
  return out;
}

std::string rel_json(const RelTable& table) {
  ordered_json root;
  ordered_json state = ordered_json::object();
  for (const auto& [k, v] : table.state_desc) state[k] = v;
  root["state"] = state;
  ordered_json rows = ordered_json::array();
  for (const auto& [p, cells] : table.rows) {
    ordered_json row;
    row["p"] = p;
    ordered_json routes = ordered_json::object();
    Real worst = cells.front().residual;
    for (const RelCell& c : cells) {
      routes[route_name(c.route)] = {
          {"A", c.triple.A.str(table.digits)},
          {"B", c.triple.B.str(table.digits)},
          {"C", c.triple.C.str(table.digits)},
      };
      worst = max(worst, c.residual);
    }
    row["routes"] = routes;
    row["indint1_residual"] = worst.str(6);
    rows.push_back(row);
  }
  root["rows"] = rows;
  return root.dump(2) + "\n";
}

NonrelTable build_nonrel_table(const NonrelState& state, int k_min, int k_max,
                               const std::vector<NonrelRoute>& routes,
                               const PrecisionCtx& ctx) {
  NonrelTable table;
  table.digits = ctx.decimal_digits();
  table.state_desc = {
      {"n", std::to_string(state.n())},
      {"l", std::to_string(state.l())},
      {"Z", state.Z().str(table.digits)},
      {"a0", state.a0().str(table.digits)},
      {"bits", std::to_string(ctx.bits)},
  };
  for (NonrelRoute route : routes) {
    for (NonrelMoment& m : nonrel_table(state, k_min, k_max, route, ctx)) {
      int k = m.k;
      table.rows[k].push_back(std::move(m));
    }
  }
  return table;
}

std::string nonrel_csv(const NonrelTable& table) {
  std::string out = "k,route,value\n";
  for (const auto& [k, cells] : table.rows) {
    for (const NonrelMoment& m : cells) {
      out += std::to_string(k);
      out += ',';
      out += nonrel_route_name(m.route);
      out += ',';
      out += m.value.str(table.digits);
      out += '\n';
    }
  }
  return out;
}

std::string nonrel_json(const NonrelTable& table) {
  ordered_json root;
  ordered_json state = ordered_json::object();
  for (const auto& [k, v] : table.state_desc) state[k] = v;
  root["state"] = state;
  ordered_json rows = ordered_json::array();
  for (const auto& [k, cells] : table.rows) {
    ordered_json row;
    row["k"] = k;
    ordered_json routes = ordered_json::object();
    for (const NonrelMoment& m : cells) routes[nonrel_route_name(m.route)] = m.value.str(table.digits);
    row["routes"] = routes;
    rows.push_back(row);
  }
  root["rows"] = rows;
  return root.dump(2) + "\n";
}

}  // namespace dcmom
