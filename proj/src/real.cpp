#include "dcmom/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "dcmom/errors.hpp"

namespace dcmom {

namespace {
mpfr_prec_t join(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::parse(std::string_view text, mpfr_prec_t prec) {
  Real r(prec);
  std::string buf(text);
  if (mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
    throw InvalidState("not a decimal number: '" + buf + "'");
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si_2exp(r.v_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
  return r;
}

Real Real::factorial(unsigned long n, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_fac_ui(r.v_, n, MPFR_RNDN);
  return r;
}

Real Real::rounded_to(mpfr_prec_t prec) const {
  Real r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (digits < 2) digits = 2;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string out;
  const char* digs = s;
  if (*digs == '-') {
    out += '-';
    ++digs;
  }
  out += digs[0];
  out += '.';
  out += (digs + 1);
  out += 'e';
  out += std::to_string(static_cast<long>(e) - 1);
  mpfr_free_str(s);
  return out;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define DCMOM_BINOP(op, fn)                            \
  Real operator op(const Real& a, const Real& b) {     \
    Real r(join(a, b));                                \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                   \
    return r;                                          \
  }
DCMOM_BINOP(+, mpfr_add)
DCMOM_BINOP(-, mpfr_sub)
DCMOM_BINOP(*, mpfr_mul)
DCMOM_BINOP(/, mpfr_div)
#undef DCMOM_BINOP

Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
  Real r(b.prec());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

#define DCMOM_UNFN(name, fn)      \
  Real name(const Real& a) {      \
    Real r(a.prec());             \
    fn(r.v_, a.v_, MPFR_RNDN);    \
    return r;                     \
  }
DCMOM_UNFN(sqrt, mpfr_sqrt)
DCMOM_UNFN(abs, mpfr_abs)
DCMOM_UNFN(exp, mpfr_exp)
DCMOM_UNFN(log, mpfr_log)
DCMOM_UNFN(tgamma, mpfr_gamma)
DCMOM_UNFN(cosh, mpfr_cosh)
DCMOM_UNFN(sinh, mpfr_sinh)
DCMOM_UNFN(tanh, mpfr_tanh)
#undef DCMOM_UNFN

Real pow_int(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& e) {
  Real r(join(base, e));
  mpfr_pow(r.v_, base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_max(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_min(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

PrecisionCtx PrecisionCtx::standard(int bits) {
  return with_tol(bits, Real::pow2(-(bits / 4), bits));
}

PrecisionCtx PrecisionCtx::with_tol(int bits, Real tol) {
  if (bits < 64) throw InvalidState("precision must be at least 64 bits");
  if (!(tol > 0L) || !(tol < 1L)) throw InvalidState("rel_tol must lie in (0, 1)");
  return PrecisionCtx{bits, std::move(tol)};
}

int PrecisionCtx::decimal_digits() const {
  return static_cast<int>(std::ceil(bits * 0.30103));
}

Real rel_diff(const Real& a, const Real& b) {
  Real d = abs(a - b);
  Real s = max(abs(a), abs(b));
  if (s.is_zero()) return d;
  return d / s;
}

}  // namespace dcmom
