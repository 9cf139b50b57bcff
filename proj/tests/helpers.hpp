#pragma once

#include <string>
#include <vector>

#include "dcmom/real.hpp"
#include "dcmom/states.hpp"

namespace dcmom::testing {

inline Real rd(const char* s, int bits = 256) { return Real::parse(s, bits); }

inline Real tol_digits(int digits, int bits = 256) {
  return Real::parse("1e-" + std::to_string(digits), bits);
}

// Shared grid of bound states: n_r <= n_r_max, kappa in +-{1,2,3},
// mu in {0.01, 0.1, 0.5, 0.9|kappa|}.
inline std::vector<DiracState> state_grid(const PrecisionCtx& ctx, int n_r_max = 5,
                                          int kappa_max = 3) {
  std::vector<DiracState> out;
  for (int n_r = 0; n_r <= n_r_max; ++n_r) {
    for (int ak = 1; ak <= kappa_max; ++ak) {
      for (int sk = -1; sk <= 1; sk += 2) {
        int kappa = sk * ak;
        if (n_r == 0 && kappa > 0) continue;
        for (const char* mus : {"0.01", "0.1", "0.5"}) {
          out.push_back(DiracState::make(n_r, kappa, rd(mus, ctx.bits), ctx));
        }
        Real mu_big = rd("0.9", ctx.bits) * static_cast<long>(ak);
        out.push_back(DiracState::make(n_r, kappa, mu_big, ctx));
      }
    }
  }
  return out;
}

}  // namespace dcmom::testing
