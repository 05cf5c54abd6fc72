#include "hamming/wide_real.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hamming {

WideReal::WideReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

WideReal::WideReal(double x, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, x, MPFR_RNDN);
}

WideReal::WideReal(long x, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, x, MPFR_RNDN);
}

WideReal::WideReal(const mpz_class& x, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, x.get_mpz_t(), MPFR_RNDN);
}

WideReal::~WideReal() { mpfr_clear(value_); }

WideReal::WideReal(const WideReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

WideReal::WideReal(WideReal&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

WideReal& WideReal::operator=(const WideReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

WideReal& WideReal::operator=(WideReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

void WideReal::widen_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

WideReal& WideReal::operator+=(const WideReal& rhs) {
  widen_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

WideReal& WideReal::operator-=(const WideReal& rhs) {
  widen_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

WideReal& WideReal::operator*=(const WideReal& rhs) {
  widen_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

WideReal& WideReal::operator/=(const WideReal& rhs) {
  widen_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

WideReal WideReal::operator-() const {
  WideReal out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

WideReal log(const WideReal& x) {
  WideReal out(x.precision());
  mpfr_log(out.value_, x.value_, MPFR_RNDN);
  return out;
}

WideReal abs(const WideReal& x) {
  WideReal out(x.precision());
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

LogValue WideReal::to_log_value() const {
  if (is_zero()) return LogValue::zero();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return LogValue::from_log(sign(), std::log(std::abs(mant)) + static_cast<double>(exp2) * std::numbers::ln2);
}

}  // namespace hamming
