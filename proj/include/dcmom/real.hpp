#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

namespace dcmom {

// Arbitrary-precision real number backed by MPFR.
//
// Every value carries its own working precision. Binary operations produce
// a result allocated at the wider of the two operand precisions, rounded to
// nearest. There are no implicit conversions from built-in floating types;
// use the explicit factories so no precision is lost by accident.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long v, mpfr_prec_t prec);
  static Real of(int v, mpfr_prec_t prec) { return of(static_cast<long>(v), prec); }
  static Real of(double v, mpfr_prec_t prec);
  // Parses a decimal string; throws InvalidState on malformed input.
  static Real parse(std::string_view text, mpfr_prec_t prec);
  // 2^e at the given precision (exact).
  static Real pow2(long e, mpfr_prec_t prec);
  static Real factorial(unsigned long n, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real rounded_to(mpfr_prec_t prec) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Scientific-notation decimal string with `digits` significant digits.
  std::string str(int digits) const;

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Exponent such that |x| ~ 2^exponent; only valid for nonzero finite x.
  long exponent2() const { return static_cast<long>(mpfr_get_exp(v_)); }

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  friend Real sqrt(const Real& a);
  friend Real abs(const Real& a);
  friend Real exp(const Real& a);
  friend Real log(const Real& a);
  friend Real pow_int(const Real& a, long e);
  friend Real pow(const Real& base, const Real& e);
  friend Real tgamma(const Real& a);
  friend Real cosh(const Real& a);
  friend Real sinh(const Real& a);
  friend Real tanh(const Real& a);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

// Working precision plus the generic comparison tolerance threaded through
// all numerics. Immutable after construction.
struct PrecisionCtx {
  int bits;
  Real rel_tol;

  // rel_tol defaults to 2^(-bits/4).
  static PrecisionCtx standard(int bits);
  static PrecisionCtx with_tol(int bits, Real tol);

  PrecisionCtx doubled() const { return with_tol(2 * bits, rel_tol); }

  Real real(long v) const { return Real::of(v, bits); }
  Real real(int v) const { return Real::of(static_cast<long>(v), bits); }
  Real real(std::string_view s) const { return Real::parse(s, bits); }
  // ceil(bits * log10(2)): decimal digits carried by this precision.
  int decimal_digits() const;
};

// |a - b| / max(|a|, |b|), or |a - b| when both vanish.
Real rel_diff(const Real& a, const Real& b);

}  // namespace dcmom
