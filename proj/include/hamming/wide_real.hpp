#pragma once

#include "hamming/log_value.hpp"

#include <gmpxx.h>
#include <mpfr.h>

namespace hamming {

/// Owning wrapper around an MPFR float with an explicit bit precision.
///
/// Binary operations produce a result at the larger of the two operand
/// precisions, rounded to nearest.
class WideReal {
 public:
  explicit WideReal(mpfr_prec_t bits = 53);
  WideReal(double x, mpfr_prec_t bits);
  WideReal(long x, mpfr_prec_t bits);
  WideReal(const mpz_class& x, mpfr_prec_t bits);
  ~WideReal();

  WideReal(const WideReal& other);
  WideReal(WideReal&& other) noexcept;
  WideReal& operator=(const WideReal& other);
  WideReal& operator=(WideReal&& other) noexcept;

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Sign and ln|x|, safe for magnitudes far outside the double range.
  LogValue to_log_value() const;

  WideReal& operator+=(const WideReal& rhs);
  WideReal& operator-=(const WideReal& rhs);
  WideReal& operator*=(const WideReal& rhs);
  WideReal& operator/=(const WideReal& rhs);

  friend WideReal operator+(WideReal lhs, const WideReal& rhs) { return lhs += rhs; }
  friend WideReal operator-(WideReal lhs, const WideReal& rhs) { return lhs -= rhs; }
  friend WideReal operator*(WideReal lhs, const WideReal& rhs) { return lhs *= rhs; }
  friend WideReal operator/(WideReal lhs, const WideReal& rhs) { return lhs /= rhs; }
  WideReal operator-() const;

  friend WideReal log(const WideReal& x);
  friend WideReal abs(const WideReal& x);
  friend bool operator<(const WideReal& a, const WideReal& b) { return mpfr_less_p(a.value_, b.value_); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  void widen_to(mpfr_prec_t bits);
  mpfr_t value_;
};

}  // namespace hamming
