#include "hamming/specfun.hpp"

#include "hamming/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <string>

namespace hamming {

namespace {

// Below this the direct sum of ln((n-i)/(i+1)) beats lgamma cancellation
// for n up to ~1e4.
constexpr long kDirectLnBinomialLimit = 64;

// num/den rounded to nearest; mpq_get_d would truncate.
double nearest_double(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, r.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

// -x ln x, taking ln x = log1p(-y) when x is the larger part so that the
// small complement y sets the accuracy.
double entropy_term(double x, double y) {
  if (x <= 0.0) return 0.0;
  return x > 0.5 ? -x * std::log1p(-y) : -x * std::log(x);
}

}  // namespace

BigInt binomial_exact(long n, long k) {
  if (n < 0) throw DomainError("binomial_exact: negative n");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

double ln_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw DomainError("ln_binomial: need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  const long m = std::min(k, n - k);
  if (m < kDirectLnBinomialLimit) {
    double acc = 0.0;
    for (long i = 0; i < m; ++i) acc += std::log(static_cast<double>(n - i) / static_cast<double>(i + 1));
    return acc;
  }
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(m) + 1.0) -
         std::lgamma(static_cast<double>(n - m) + 1.0);
}

double pochhammer(double a, int j) {
  if (j < 0) throw DomainError("pochhammer: negative j");
  double out = 1.0;
  for (int t = 0; t < j; ++t) out *= a + t;
  return out;
}

Rational pochhammer_exact(const Rational& a, int j) {
  if (j < 0) throw DomainError("pochhammer_exact: negative j");
  Rational out = 1;
  for (int t = 0; t < j; ++t) out *= a + t;
  return out;
}

Rational krawtchouk_exact(int i, int x, int q, int d) {
  if (q < 2) throw DomainError("krawtchouk: q must be >= 2");
  if (d < 1 || i < 0 || i > d) throw DomainError("krawtchouk: need 0 <= i <= d, d >= 1");
  if (x < 0 || x > d) throw DomainError("krawtchouk: need 0 <= x <= d");

  const Rational ratio(q, q - 1);
  Rational sum = 0;
  // term_j = (-i)_j (-x)_j / ((-d)_j j!) ratio^j, built from term_{j-1}.
  Rational term = 1;
  for (int j = 0; j <= i; ++j) {
    if (j > 0) {
      term *= Rational(-i + j - 1) * Rational(-x + j - 1) * ratio;
      term /= Rational(-d + j - 1) * Rational(j);
    }
    if (sgn(term) == 0) break;
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

double krawtchouk(int i, int x, int q, int d) { return krawtchouk_exact(i, x, q, d).get_d(); }

double binary_entropy(double x) {
  constexpr double tol = 1e-12;
  if (std::isnan(x) || x < -tol || x > 1.0 + tol)
    throw DomainError("binary_entropy: argument outside [0, 1]: " + std::to_string(x));
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double y = 1.0 - x;
  return entropy_term(x, y) + entropy_term(y, x);
}

double binary_entropy(double x, double one_minus_x) {
  if (x < 0.0 || one_minus_x < 0.0) throw DomainError("binary_entropy: negative occupation");
  return entropy_term(x, one_minus_x) + entropy_term(one_minus_x, x);
}

UnitFraction::UnitFraction(BigInt num, BigInt den) : numerator(std::move(num)), denominator(std::move(den)) {
  if (sgn(denominator) <= 0) throw ConsistencyError("UnitFraction: non-positive denominator");
  if (sgn(numerator) < 0 || numerator > denominator)
    throw ConsistencyError("UnitFraction: value outside [0, 1]: " + numerator.get_str() + "/" +
                           denominator.get_str());
}

double UnitFraction::value() const { return nearest_double(numerator, denominator); }

double UnitFraction::complement() const { return nearest_double(denominator - numerator, denominator); }

double UnitFraction::entropy() const {
  if (is_zero() || is_one()) return 0.0;
  return binary_entropy(value(), complement());
}

WideReal UnitFraction::entropy_wide(mpfr_prec_t bits) const {
  WideReal out(bits);
  if (is_zero() || is_one()) return out;
  const WideReal den(denominator, bits);
  const WideReal x = WideReal(numerator, bits) / den;
  const WideReal y = WideReal(BigInt(denominator - numerator), bits) / den;
  out -= x * log(x);
  out -= y * log(y);
  return out;
}

}  // namespace hamming
