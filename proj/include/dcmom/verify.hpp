#pragma once

#include <string>
#include <vector>

#include "dcmom/real.hpp"
#include "dcmom/states.hpp"

namespace dcmom {

// Grid and scope of one verification run. The default grid keeps the run
// in the seconds range; tests and the acceptance suite widen it.
struct VerifyOptions {
  int p_max = 6;
  std::vector<int> n_r_values{0, 1, 2, 3};
  std::vector<int> kappa_values{-1, 1, -2, 2};
  // mu as fractions of |kappa|
  std::vector<std::string> mu_fractions{"0.1", "0.5", "0.9"};
  bool with_quadrature = false;
  int quad_p_min = -1;
  int quad_p_max = 3;
};

struct IdentityStat {
  std::string name;
  Real max_residual;
  Real tolerance;
  bool pass = false;
  long checks = 0;
};

struct VerifyReport {
  std::vector<IdentityStat> identities;
  int bits = 0;
  long states_checked = 0;
  long skipped_divergent = 0;
  bool pass = false;

  std::string to_json(int digits) const;
};

// Machine-checks every algebraic identity of the moment machinery over the
// grid: initial vectors against both closed forms, dual-representation
// equivalence, linear dependence, all five recurrence routes against the
// closed forms, the P/Q determinants and factorization, the two-term
// up/down inverse pair, Hahn series vs recurrence, the nonrelativistic
// routes, and (optionally) the quadrature oracle.
VerifyReport run_verify(const VerifyOptions& options, const PrecisionCtx& ctx);

}  // namespace dcmom
