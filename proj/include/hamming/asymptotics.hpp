#pragma once

// Leading-order large-d formulas and the fits that extract the scaling
// constants from exact closed-form samples.

#include "hamming/measures.hpp"

#include <string>
#include <vector>

namespace hamming {

/// q / sqrt(2 pi (q-1)): the Stirling prefactor shared by f, g2 and g3.
double stirling_prefactor(int q);

/// q^(d-1) d^(-1/2) q/sqrt(2 pi (q-1)) s((q-n)/q), the r = 1 leading term
/// at half-integer filling k0 = d/q.
LogValue asymptotic_entropy_r1(int n, const GraphParams& g);

/// f(n,q,r) = prefactor * sum_{i=1}^r (s(F^(n)_{i,0}) + (n-1) s(F^(n)_{i,1})).
double f_coefficient(int n, int q, int r);

/// q^(d-r) d^(-1/2) f(n,q,r).
LogValue asymptotic_entropy_finite_r(int n, int q, int r, int d);

/// prefactor * sum of the I_2 brackets, evaluated in MPFR and rounded once.
double g2_coefficient(int q, int r);
/// prefactor * sum of the I_3 brackets. Signed; q = 2 is UnsupportedGeometry.
double g3_coefficient(int q, int r);

/// One exact entropy at half-integer filling, for the finite-r fit.
struct ScalingSample {
  int d;
  int r;
  int n;
  int q;
  LogValue entropy;

  double x() const { return static_cast<double>(r) / d; }
  /// S / (V_A (r/d)^(1/2)).
  double ratio() const;
};

struct ScalingFit {
  double beta = 0.0;
  double gamma = 0.0;
  double residual = 0.0;  // RMS
  std::string sample_range;
};

/// The (r, d/r, n, q) product grid. d is rounded to the nearest multiple of
/// q so that k0 = d/q is an integer.
struct FitGrid {
  std::vector<int> r{100, 200, 400, 600};
  std::vector<int> d_over_r{20, 40, 80, 160};
  std::vector<int> n{1, 2, 3};
  std::vector<int> q{3, 4, 5};
};

int rounded_diameter(int r, int d_over_r, int q);

/// Exact entropies on every valid grid point (n <= q), in lexicographic
/// (r, d/r, n, q) order. The parallel version fills the same slots.
std::vector<ScalingSample> scaling_samples(const FitGrid& grid);
std::vector<ScalingSample> scaling_samples_serial(const FitGrid& grid);

/// OLS of ratio() on x(): ratio = beta - gamma x. Fewer than three samples or
/// a single distinct x is a DomainError.
ScalingFit fit_beta_gamma(std::span<const ScalingSample> samples);

/// One exact entropy with r = (1 - delta) d.
struct DeltaSample {
  int d;
  double delta;
  int n;
  int q;
  LogValue entropy;

  int r() const;
  /// S / (V_A (1-delta)^(1/2)).
  double ratio() const;
};

struct BetaTildeEstimate {
  double value = 0.0;  // ratio at the largest d, i.e. beta~/(1-delta)^(1/2)
  int d_last = 0;
  /// ratio(d_last) - ratio(d_last/2); NaN when d_last/2 was not sampled.
  double drift = 0.0;
  /// 2 ratio(d_last) - ratio(d_last/2), assuming a 1/d correction. Diagnostic only.
  double richardson = 0.0;
};

/// r = (1-delta) d must be an integer and d a multiple of q; otherwise a
/// DomainError.
DeltaSample delta_sample(int d, double delta, int n, int q);

/// Samples for each (q, d) in the product, in that order.
std::vector<DeltaSample> delta_samples(double delta, int n, std::span<const int> qs, std::span<const int> ds);
std::vector<DeltaSample> delta_samples_serial(double delta, int n, std::span<const int> qs, std::span<const int> ds);

/// Last-point estimate over samples that share (delta, n, q).
BetaTildeEstimate fit_beta_tilde(std::span<const DeltaSample> samples);

}  // namespace hamming
