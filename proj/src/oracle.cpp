#include "dcmom/oracle.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dcmom/errors.hpp"

namespace dcmom {

namespace detail {

// Adaptive tanh-sinh quadrature over a fixed set of panels. Integrand
// evaluations (up to three components sharing one wavefunction evaluation)
// are cached per node, so integrals of x^pw * f over many powers pw reuse
// them. Levels halve the step; a level-(l) estimate reuses every node of
// level l-1.
class TanhSinh {
 public:
  struct Panel {
    Real a;
    Real b;
  };
  using Eval = std::function<std::array<Real, 3>(const Real&)>;

  TanhSinh(std::vector<Panel> panels, Eval eval, int bits, int ncomp)
      : panels_(std::move(panels)), eval_(std::move(eval)), bits_(bits), ncomp_(ncomp) {
    // After the change of variable the summand decays like
    // exp(-(pi/2) e^{|t|}); pick tmax so the truncated weight is far below
    // the working precision.
    tmax_ = std::log((bits_ + 96) * 0.6931 * 2.0 / 3.14159265358979) + 1.0;
  }

  // Integrates x^pw * f_c over the panels for each component c, refining
  // until successive levels agree to rel_tol.
  std::array<Real, 3> integrate_power(int pw, const Real& rel_tol) {
    std::array<Real, 3> sum{Real::of(0L, bits_), Real::of(0L, bits_), Real::of(0L, bits_)};
    std::array<Real, 3> prev{};
    for (int level = kFirstLevel; level <= kMaxLevel; ++level) {
      ensure_level(level);
      const auto& nodes = levels_[static_cast<size_t>(level - kFirstLevel)];
      for (const Node& nd : nodes) {
        Real xe = pow_int(nd.x, pw);
        for (int c = 0; c < ncomp_; ++c) sum[c] = sum[c] + nd.w * xe * nd.f[c];
      }
      Real h = Real::pow2(-level, bits_);
      std::array<Real, 3> cur{};
      for (int c = 0; c < ncomp_; ++c) cur[c] = h * sum[c];
      if (level > kFirstLevel) {
        bool ok = true;
        Real floor_scale = abs(cur[0]) * Real::pow2(-40, bits_);
        for (int c = 0; c < ncomp_ && ok; ++c) {
          Real scale = max(abs(cur[c]), floor_scale);
          if (scale.is_zero()) continue;
          if (!(abs(cur[c] - prev[c]) <= rel_tol * scale)) ok = false;
        }
        if (ok) return cur;
      }
      prev = std::move(cur);
    }
    throw QuadratureNonConvergence("tanh-sinh refinement exhausted at level " +
                                   std::to_string(kMaxLevel));
  }

 private:
  static constexpr int kFirstLevel = 2;
  static constexpr int kMaxLevel = 11;

  struct Node {
    Real x;
    Real w;
    std::array<Real, 3> f;
  };

  void ensure_level(int level) {
    while (built_ < level) {
      int l = built_ + 1;
      std::vector<Node> nodes;
      const double h = std::ldexp(1.0, -l);
      const long kmax = static_cast<long>(tmax_ / h) + 1;
      for (const Panel& pan : panels_) {
        Real width = pan.b - pan.a;
        for (long k = -kmax; k <= kmax; ++k) {
          if (l > kFirstLevel && (k % 2 == 0)) continue;  // even nodes live in coarser levels
          Real t = Real::of(k, bits_) * Real::pow2(-l, bits_);
          // x = a + (b-a) sigma(y), y = pi sinh t; then
          // dx/dt = (b-a) pi cosh(t) sigma(y) sigma(-y).
          Real y = sinh(t) * pi();
          Real splus = sigmoid(y);
          Real sminus = sigmoid(-y);
          Real x = pan.a + width * splus;
          if (x.is_zero() || x == pan.a) continue;  // underflowed to the endpoint
          Real w = width * pi() * cosh(t) * splus * sminus;
          std::array<Real, 3> f = eval_(x);
          nodes.push_back(Node{std::move(x), std::move(w), std::move(f)});
        }
      }
      levels_.push_back(std::move(nodes));
      built_ = l;
    }
  }

  Real pi() const {
    Real r(static_cast<mpfr_prec_t>(bits_));
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
  }

  // 1 / (1 + e^{-y}) evaluated on the numerically safe branch.
  static Real sigmoid(const Real& y) {
    if (y.sign() >= 0) return 1L / (1L + exp(-y));
    Real e = exp(y);
    return e / (1L + e);
  }

  std::vector<Panel> panels_;
  Eval eval_;
  int bits_;
  int ncomp_;
  double tmax_;
  int built_ = kFirstLevel - 1;
  std::vector<std::vector<Node>> levels_;
};

}  // namespace detail

namespace {

// M(-n, c, x): terminating Kummer series, n+1 terms.
Real kummer_terminating(long n, const Real& c, const Real& x, int bits) {
  Real sum = Real::of(1L, bits);
  Real term = Real::of(1L, bits);
  for (long j = 0; j < n; ++j) {
    term = term * (j - n) * x / ((c + j) * (j + 1));
    sum = sum + term;
  }
  return sum;
}

// Generalized Laguerre L_q^{(alpha)}(x) for integer alpha >= 0.
Real laguerre(long q, long alpha, const Real& x, int bits) {
  // leading coefficient C(q+alpha, q)
  Real coef = Real::of(1L, bits);
  for (long j = 1; j <= q; ++j) coef = coef * (alpha + j) / j;
  Real sum = coef;
  for (long j = 0; j < q; ++j) {
    coef = coef * (j - q) * x / ((j + 1) * (alpha + j + 1));
    sum = sum + coef;
  }
  return sum;
}

struct DiracWave {
  Real lambda;   // a * beta
  Real nu;
  Real eps;
  Real Nbig;     // mu / a
  Real c_plus;   // normalization of F
  Real c_minus;  // normalization of G
  long n_r;
  long kappa;
};

DiracWave make_wave(const DiracState& state, const PrecisionCtx& ctx) {
  const int bits = ctx.bits;
  Spectral sp = derive_parameters(state, ctx);
  Real mu = state.mu().rounded_to(bits);
  Real lambda = sp.a * state.beta_scale().rounded_to(bits);
  Real Nbig = mu / sp.a;
  Real kap = Real::of(static_cast<long>(state.kappa()), bits);
  Real g2nu1 = tgamma(2L * sp.nu + 1L);
  Real gtop = tgamma(2L * sp.nu + (state.n_r() + 1L));
  Real nrfac = Real::factorial(static_cast<unsigned long>(state.n_r()), bits);
  Real common = pow(2L * lambda, Real::of(3L, bits) / 2L) / g2nu1 *
                sqrt(gtop / (4L * Nbig * (Nbig - kap) * nrfac));
  Real c_plus = common * sqrt(1L + sp.eps);
  Real c_minus = common * sqrt(1L - sp.eps);
  return DiracWave{std::move(lambda), std::move(sp.nu),  std::move(sp.eps),
                   std::move(Nbig),   std::move(c_plus), std::move(c_minus),
                   state.n_r(),       state.kappa()};
}

// (F, G) expressed in the scaled variable x = 2 lambda r.
RadialPair wave_at_x(const DiracWave& w, const Real& x, int bits) {
  Real c = 2L * w.nu + 1L;
  Real m1 = kummer_terminating(w.n_r, c, x, bits);
  Real base = pow(x, w.nu - 1L) * exp(-(x / 2L));
  Real kapR = Real::of(w.kappa, bits);
  Real bf = (w.Nbig - kapR) * m1;
  Real bg = bf;
  if (w.n_r > 0) {
    Real m2 = kummer_terminating(w.n_r - 1, c, x, bits) * w.n_r;
    bf = bf - m2;
    bg = bg + m2;
  }
  return RadialPair{w.c_plus * base * bf, -(w.c_minus * base * bg)};
}

// Truncation point of x^sigma e^{-x}: smallest x past the peak where the
// integrand has dropped by 2^-(bits+20).
double tail_cutoff(double sigma, int bits) {
  if (sigma < 1.0) sigma = 1.0;
  const double drop = (bits + 20) * 0.6931471805599453;
  double x = sigma + drop + 10.0;
  for (int i = 0; i < 64; ++i) {
    double next = sigma * std::log(x) - sigma * std::log(sigma) + sigma + drop;
    if (std::abs(next - x) < 1e-9 * x) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

}  // namespace

RadialPair radial_FG(const DiracState& state, const Real& r, const PrecisionCtx& ctx) {
  if (!(r > 0L)) throw InvalidState("radius must be positive");
  DiracWave w = make_wave(state, ctx);
  return wave_at_x(w, 2L * w.lambda * r.rounded_to(ctx.bits), ctx.bits);
}

Real nonrel_radial_R(const NonrelState& state, const Real& r, const PrecisionCtx& ctx) {
  if (!(r > 0L)) throw InvalidState("radius must be positive");
  const int bits = ctx.bits;
  const long n = state.n(), l = state.l();
  Real s = (state.a0() * n) / (2L * state.Z());  // n a0 / 2Z
  Real x = r.rounded_to(bits) / s;
  Real cn = Real::of(1L, bits);
  for (long j = n - l; j <= n + l; ++j) cn = cn * j;  // (n+l)!/(n-l-1)!
  Real norm = sqrt(1L / (pow_int(s, 3) * 2L * n * cn));
  return norm * exp(-(x / 2L)) * pow_int(x, l) * laguerre(n - l - 1, 2 * l + 1, x, bits);
}

int quadrature_digits(const PrecisionCtx& ctx) {
  int d = static_cast<int>(std::lround(ctx.bits * 30.0 / 256.0));
  return d < 15 ? 15 : d;
}

DiracQuadrature::DiracQuadrature(const DiracState& state, const PrecisionCtx& ctx,
                                 int p_max_hint)
    : state_(state), ctx_(ctx), two_lambda_(Real(static_cast<mpfr_prec_t>(ctx.bits))) {
  DiracWave w = make_wave(state, ctx);
  two_lambda_ = 2L * w.lambda;
  const int bits = ctx.bits;
  double nu_d = w.nu.to_double();
  double sigma = std::max(p_max_hint, 2) + 2.0 + 2.0 * nu_d + 2.0 * state.n_r();
  double cutoff = tail_cutoff(sigma, bits);
  Real split = Real::of(2.0 * nu_d + 6.0, bits);
  Real xmax = Real::of(std::max(cutoff, 2.0 * (2.0 * nu_d + 6.0) + 10.0), bits);

  auto eval = [w, bits](const Real& x) -> std::array<Real, 3> {
    RadialPair fg = wave_at_x(w, x, bits);
    Real f2 = fg.F * fg.F;
    Real g2 = fg.G * fg.G;
    return {f2 + g2, f2 - g2, fg.F * fg.G};
  };
  std::vector<detail::TanhSinh::Panel> panels;
  panels.push_back({Real::of(0L, bits), split});
  panels.push_back({split, xmax});
  ts_ = std::make_unique<detail::TanhSinh>(std::move(panels), std::move(eval), bits, 3);
}

DiracQuadrature::~DiracQuadrature() = default;
DiracQuadrature::DiracQuadrature(DiracQuadrature&&) noexcept = default;
DiracQuadrature& DiracQuadrature::operator=(DiracQuadrature&&) noexcept = default;

MomentTriple DiracQuadrature::triple(int p) {
  if (!validate_power_range(state_, p, ctx_))
    throw DivergentIntegral("power " + std::to_string(p) +
                            " violates the convergence bound p > -1 - 2 nu");
  Real tol = Real::parse("1e-" + std::to_string(quadrature_digits(ctx_) + 2), ctx_.bits);
  std::array<Real, 3> I = ts_->integrate_power(p + 2, tol);
  Real pref = pow_int(two_lambda_, -(p + 3));
  return MomentTriple{p, pref * I[0], pref * I[1], pref * I[2], Route::quadrature};
}

NonrelQuadrature::NonrelQuadrature(const NonrelState& state, const PrecisionCtx& ctx,
                                   int k_max_hint)
    : state_(state), ctx_(ctx) {
  const int bits = ctx.bits;
  const long n = state.n(), l = state.l();
  Real cn = Real::of(1L, bits);
  for (long j = n - l; j <= n + l; ++j) cn = cn * j;
  Real weight = 1L / (2L * n * cn);

  double sigma = std::max(k_max_hint, 2) + 2.0 + 2.0 * l + 2.0 * (n - l - 1);
  double cutoff = tail_cutoff(sigma, bits);
  Real split = Real::of(2.0 * l + 6.0, bits);
  Real xmax = Real::of(std::max(cutoff, 2.0 * (2.0 * l + 6.0) + 10.0), bits);

  auto eval = [n, l, weight, bits](const Real& x) -> std::array<Real, 3> {
    Real L = laguerre(n - l - 1, 2 * l + 1, x, bits);
    Real g = weight * pow_int(x, 2 * l) * exp(-x) * L * L;
    return {std::move(g), Real::of(0L, bits), Real::of(0L, bits)};
  };
  std::vector<detail::TanhSinh::Panel> panels;
  panels.push_back({Real::of(0L, bits), split});
  panels.push_back({split, xmax});
  ts_ = std::make_unique<detail::TanhSinh>(std::move(panels), std::move(eval), bits, 1);
}

NonrelQuadrature::~NonrelQuadrature() = default;
NonrelQuadrature::NonrelQuadrature(NonrelQuadrature&&) noexcept = default;
NonrelQuadrature& NonrelQuadrature::operator=(NonrelQuadrature&&) noexcept = default;

Real NonrelQuadrature::moment(int k) {
  if (k <= -2 * state_.l() - 3)
    throw DivergentIntegral("power " + std::to_string(k) +
                            " violates the convergence bound k > -2l - 3");
  Real tol = Real::parse("1e-" + std::to_string(quadrature_digits(ctx_) + 2), ctx_.bits);
  std::array<Real, 3> I = ts_->integrate_power(k + 2, tol);
  Real s = (state_.a0() * static_cast<long>(state_.n())) / (2L * state_.Z());
  return pow_int(s, k) * I[0];
}

MomentTriple quadrature_triple(const DiracState& state, int p, const PrecisionCtx& ctx) {
  DiracQuadrature q(state, ctx, std::max(p, 2));
  return q.triple(p);
}

Real quadrature_nonrel(const NonrelState& state, int k, const PrecisionCtx& ctx) {
  NonrelQuadrature q(state, ctx, std::max(k, 2));
  return q.moment(k);
}

}  // namespace dcmom
