#include "hamming/log_value.hpp"

#include "hamming/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace hamming {

LogValue LogValue::from_log(int sign, double ln_mag) {
  if (sign == 0) return {};
  if (std::isnan(ln_mag)) throw DomainError("LogValue: NaN magnitude");
  if (ln_mag == -std::numeric_limits<double>::infinity()) return {};
  return {sign > 0 ? 1 : -1, ln_mag};
}

LogValue LogValue::from_double(double x) {
  if (std::isnan(x)) throw DomainError("LogValue: NaN input");
  if (x == 0.0) return {};
  return {x > 0 ? 1 : -1, std::log(std::abs(x))};
}

LogValue LogValue::from_integer(const mpz_class& x) {
  const int s = sgn(x);
  if (s == 0) return {};
  return {s, ln_abs(x)};
}

double LogValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(ln_mag);
}

double LogValue::log10_abs() const {
  if (sign == 0) return -std::numeric_limits<double>::infinity();
  return ln_mag / std::numbers::ln10;
}

LogValue operator*(const LogValue& a, const LogValue& b) {
  if (a.sign == 0 || b.sign == 0) return {};
  return {a.sign * b.sign, a.ln_mag + b.ln_mag};
}

LogValue operator/(const LogValue& a, const LogValue& b) {
  if (b.sign == 0) throw DomainError("LogValue: division by zero");
  if (a.sign == 0) return {};
  return {a.sign * b.sign, a.ln_mag - b.ln_mag};
}

LogValue operator+(const LogValue& a, const LogValue& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  const LogValue& big = a.ln_mag >= b.ln_mag ? a : b;
  const LogValue& small = a.ln_mag >= b.ln_mag ? b : a;
  const double ratio = std::exp(small.ln_mag - big.ln_mag);
  if (big.sign == small.sign) return {big.sign, big.ln_mag + std::log1p(ratio)};
  if (ratio == 1.0) return {};
  return {big.sign, big.ln_mag + std::log1p(-ratio)};
}

LogValue LogValue::pow(double exponent) const {
  if (sign == 0) {
    if (exponent <= 0) throw DomainError("LogValue: zero to a non-positive power");
    return {};
  }
  if (sign < 0) throw DomainError("LogValue: negative base in pow");
  return {1, ln_mag * exponent};
}

LogValue log_sum(std::span<const LogValue> terms) {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms)
    if (t.sign != 0) top = std::max(top, t.ln_mag);
  if (!std::isfinite(top)) return {};

  double sum = 0.0;
  double carry = 0.0;
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    const double x = t.sign * std::exp(t.ln_mag - top);
    const double next = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - next) + x;
    else
      carry += (x - next) + sum;
    sum = next;
  }
  sum += carry;
  if (sum == 0.0) return {};
  return {sum > 0 ? 1 : -1, top + std::log(std::abs(sum))};
}

double ln_abs(const mpz_class& x) {
  if (sgn(x) == 0) throw DomainError("ln_abs: zero");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(std::abs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

}  // namespace hamming
