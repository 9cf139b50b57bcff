#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcmom/moments.hpp"
#include "dcmom/nonrel.hpp"

namespace dcmom {

// Table models shared by the CSV and JSON writers so both emit identical
// numeric strings (decimal, ceil(bits * log10(2)) significant digits).

struct RelCell {
  Route route;
  MomentTriple triple;
  Real residual;  // linear-dependence residual of this triple
};

struct RelTable {
  std::vector<std::pair<std::string, std::string>> state_desc;
  std::map<int, std::vector<RelCell>> rows;  // keyed by p
  int digits = 0;
};

RelTable build_rel_table(const DiracState& state, int p_min, int p_max,
                         const std::vector<Route>& routes, const PrecisionCtx& ctx);

std::string rel_csv(const RelTable& table);
std::string rel_json(const RelTable& table);

struct NonrelTable {
  std::vector<std::pair<std::string, std::string>> state_desc;
  std::map<int, std::vector<NonrelMoment>> rows;  // keyed by power
  int digits = 0;
};

NonrelTable build_nonrel_table(const NonrelState& state, int k_min, int k_max,
                               const std::vector<NonrelRoute>& routes, const PrecisionCtx& ctx);

std::string nonrel_csv(const NonrelTable& table);
std::string nonrel_json(const NonrelTable& table);

}  // namespace dcmom
