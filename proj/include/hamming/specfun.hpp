#pragma once

// Combinatorial kernels shared by every other module: exact and log-space
// binomials, Pochhammer symbols, Krawtchouk polynomials at p = (q-1)/q, and
// the binary entropy function (natural log throughout).

#include "hamming/wide_real.hpp"

#include <gmpxx.h>

namespace hamming {

using BigInt = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial_exact(long n, long k);

/// ln C(n, k). Small min(k, n-k) is summed directly, the rest goes through
/// lgamma. Throws DomainError unless 0 <= k <= n.
double ln_binomial(long n, long k);

/// Shifted factorial (a)_j = a (a+1) ... (a+j-1), with (a)_0 = 1.
double pochhammer(double a, int j);
Rational pochhammer_exact(const Rational& a, int j);

/// K_i(x; (q-1)/q, d) = sum_j (-i)_j (-x)_j / ((-d)_j j!) (q/(q-1))^j,
/// summed term by term in exact rationals.
Rational krawtchouk_exact(int i, int x, int q, int d);
/// The exact sum above, rounded once to double.
double krawtchouk(int i, int x, int q, int d);

/// s(x) = -x ln x - (1-x) ln(1-x) with s(0) = s(1) = 0. Inputs within 1e-12
/// outside [0, 1] are clamped; anything further out is a DomainError.
double binary_entropy(double x);
/// Same function given both x and 1-x, for callers that know the complement
/// more accurately than 1-x would compute it.
double binary_entropy(double x, double one_minus_x);

/// Exact fraction num/den in [0, 1], with the complement (den-num)/den kept
/// exactly as well. Eigenvalues of the chopped correlation matrix live here.
struct UnitFraction {
  BigInt numerator;
  BigInt denominator;

  /// Throws ConsistencyError when num/den falls outside [0, 1].
  UnitFraction(BigInt num, BigInt den);

  double value() const;
  double complement() const;
  /// s(num/den), evaluated from the exact value and exact complement.
  double entropy() const;
  WideReal entropy_wide(mpfr_prec_t bits) const;

  bool is_zero() const { return sgn(numerator) == 0; }
  bool is_one() const { return numerator == denominator; }
  friend bool operator==(const UnitFraction& a, const UnitFraction& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

}  // namespace hamming
