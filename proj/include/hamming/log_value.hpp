#pragma once

#include <gmpxx.h>

#include <span>

namespace hamming {

/// Signed quantity stored as (sign, natural log of magnitude).
///
/// Carries values like q^d and the entropies built from them, which leave
/// the double range long before the closed forms stop being cheap. A zero
/// sign means exactly zero and `ln_mag` is then ignored.
struct LogValue {
  int sign = 0;
  double ln_mag = 0.0;

  static LogValue zero() { return {}; }
  static LogValue from_log(int sign, double ln_mag);
  static LogValue from_double(double x);
  static LogValue from_integer(const mpz_class& x);

  bool is_zero() const { return sign == 0; }

  /// Plain value; +-inf when the magnitude leaves the double range.
  double value() const;
  double log10_abs() const;

  LogValue operator-() const { return {-sign, ln_mag}; }
  friend LogValue operator*(const LogValue& a, const LogValue& b);
  friend LogValue operator/(const LogValue& a, const LogValue& b);
  friend LogValue operator+(const LogValue& a, const LogValue& b);
  friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }

  LogValue pow(double exponent) const;
};

/// Sum of many terms: shift by the largest magnitude, then a Neumaier
/// compensated sum of the scaled values.
LogValue log_sum(std::span<const LogValue> terms);

/// ln|x| for a nonzero big integer, accurate to a few ulps at any size.
double ln_abs(const mpz_class& x);

}  // namespace hamming
