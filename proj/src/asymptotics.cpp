#include "hamming/asymptotics.hpp"

#include "hamming/errors.hpp"
#include "hamming/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hamming {

namespace {

struct GridPoint {
  int r;
  int d;
  int n;
  int q;
};

std::vector<GridPoint> grid_points(const FitGrid& grid) {
  std::vector<GridPoint> out;
  for (int r : grid.r)
    for (int m : grid.d_over_r)
      for (int n : grid.n)
        for (int q : grid.q) {
          if (n > q || r < 1 || m < 1) continue;
          out.push_back({r, rounded_diameter(r, m, q), n, q});
        }
  return out;
}

ScalingSample sample_at(const GridPoint& p) {
  const GraphParams g(p.d, p.q);
  const EntropyResult s = entropy_closed_form({p.n, p.r}, p.d / p.q, g);
  return {p.d, p.r, p.n, p.q, s.value_log};
}

double wide_coefficient(int q, int r, std::span<const BracketTerm> terms) {
  const mpfr_prec_t bits = information_precision(q, r);
  WideReal total(bits);
  for (const auto& b : bracket_values(q, r, terms, bits)) total += b;
  return stirling_prefactor(q) * total.to_double();
}

}  // namespace

double stirling_prefactor(int q) {
  if (q < 2) throw DomainError("stirling_prefactor: q must be >= 2");
  return q / std::sqrt(2.0 * std::numbers::pi * (q - 1));
}

LogValue asymptotic_entropy_r1(int n, const GraphParams& g) {
  SubsystemSpec{n, 1}.validate(g);
  const double s = binary_entropy(static_cast<double>(g.q - n) / g.q);
  if (s <= 0.0) return LogValue::zero();
  const double lnq = std::log(static_cast<double>(g.q));
  return LogValue::from_log(1, (g.d - 1) * lnq - 0.5 * std::log(static_cast<double>(g.d)) +
                                   std::log(stirling_prefactor(g.q) * s));
}

double f_coefficient(int n, int q, int r) {
  if (n < 1 || n > q) throw DomainError("f_coefficient: need 1 <= n <= q");
  if (r < 1) throw DomainError("f_coefficient: r must be >= 1");
  const auto f0 = boundary_coefficients(n, q, r, 0);
  const auto f1 = boundary_coefficients(n, q, r, 1);
  double sum = 0.0;
  for (int i = 0; i < r; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    sum += f0[idx].entropy() + (n - 1) * f1[idx].entropy();
  }
  return stirling_prefactor(q) * sum;
}

LogValue asymptotic_entropy_finite_r(int n, int q, int r, int d) {
  const GraphParams g(d, q);
  SubsystemSpec{n, r}.validate(g);
  const double f = f_coefficient(n, q, r);
  if (f <= 0.0) return LogValue::zero();
  return LogValue::from_log(
      1, (d - r) * std::log(static_cast<double>(q)) - 0.5 * std::log(static_cast<double>(d)) + std::log(f));
}

double g2_coefficient(int q, int r) {
  if (q < 2) throw DomainError("g2_coefficient: q must be >= 2");
  if (r < 1) throw DomainError("g2_coefficient: r must be >= 1");
  return wide_coefficient(q, r, kMutualBracket);
}

double g3_coefficient(int q, int r) {
  if (q == 2) throw UnsupportedGeometry("tripartite undefined for q=2");
  if (q < 3) throw DomainError("g3_coefficient: q must be >= 3");
  if (r < 1) throw DomainError("g3_coefficient: r must be >= 1");
  return wide_coefficient(q, r, kTripartiteBracket);
}

double ScalingSample::ratio() const {
  if (entropy.is_zero()) return 0.0;
  const double ln_volume = std::log(static_cast<double>(n)) + (d - r) * std::log(static_cast<double>(q));
  return entropy.sign * std::exp(entropy.ln_mag - ln_volume - 0.5 * std::log(x()));
}

int rounded_diameter(int r, int d_over_r, int q) {
  const long raw = static_cast<long>(r) * d_over_r;
  const long m = std::max(1L, std::lround(static_cast<double>(raw) / q));
  return static_cast<int>(m * q);
}

std::vector<ScalingSample> scaling_samples_serial(const FitGrid& grid) {
  const auto points = grid_points(grid);
  std::vector<ScalingSample> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(sample_at(p));
  return out;
}

std::vector<ScalingSample> scaling_samples(const FitGrid& grid) {
  const auto points = grid_points(grid);
  std::vector<ScalingSample> out(points.size(), ScalingSample{0, 0, 0, 0, {}});
  const auto count = static_cast<long>(points.size());
  parallel_for(count, [&](long k) {
    out[static_cast<std::size_t>(k)] = sample_at(points[static_cast<std::size_t>(k)]);
  });
  return out;
}

ScalingFit fit_beta_gamma(std::span<const ScalingSample> samples) {
  if (samples.size() < 3) throw DomainError("fit_beta_gamma: need at least 3 samples");
  const double count = static_cast<double>(samples.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& s : samples) {
    mx += s.x();
    my += s.ratio();
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& s : samples) {
    sxx += (s.x() - mx) * (s.x() - mx);
    sxy += (s.x() - mx) * (s.ratio() - my);
  }
  if (!(sxx > 0.0)) throw DomainError("fit_beta_gamma: all samples share one r/d");
  const double slope = sxy / sxx;

  ScalingFit fit;
  fit.beta = my - slope * mx;
  fit.gamma = -slope;
  double ss = 0.0;
  for (const auto& s : samples) {
    const double e = s.ratio() - (fit.beta - fit.gamma * s.x());
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / count);

  const auto [dmin, dmax] = std::ranges::minmax(samples, {}, &ScalingSample::d);
  const auto [rmin, rmax] = std::ranges::minmax(samples, {}, &ScalingSample::r);
  std::ostringstream range;
  range << samples.size() << " samples, d in [" << dmin.d << ", " << dmax.d << "], r in [" << rmin.r << ", "
        << rmax.r << "]";
  fit.sample_range = range.str();
  return fit;
}

int DeltaSample::r() const { return static_cast<int>(std::lround((1.0 - delta) * d)); }

double DeltaSample::ratio() const {
  if (entropy.is_zero()) return 0.0;
  const double ln_volume = std::log(static_cast<double>(n)) + (d - r()) * std::log(static_cast<double>(q));
  return entropy.sign * std::exp(entropy.ln_mag - ln_volume - 0.5 * std::log1p(-delta));
}

DeltaSample delta_sample(int d, double delta, int n, int q) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (d % q != 0) throw DomainError("delta_sample: d must be a multiple of q");
  const double raw = (1.0 - delta) * d;
  const long r = std::lround(raw);
  if (std::abs(raw - static_cast<double>(r)) > 1e-9 || r < 1)
    throw DomainError("delta_sample: (1 - delta) d is not a positive integer");
  const GraphParams g(d, q);
  const EntropyResult s = entropy_closed_form({n, static_cast<int>(r)}, d / q, g);
  return {d, delta, n, q, s.value_log};
}

std::vector<DeltaSample> delta_samples(double delta, int n, std::span<const int> qs, std::span<const int> ds) {
  std::vector<std::pair<int, int>> points;
  for (int q : qs)
    for (int d : ds) points.emplace_back(q, d);
  std::vector<DeltaSample> out(points.size(), DeltaSample{0, delta, n, 0, {}});
  const auto count = static_cast<long>(points.size());
  parallel_for(count, [&](long k) {
    const auto [q, d] = points[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = delta_sample(d, delta, n, q);
  });
  return out;
}

std::vector<DeltaSample> delta_samples_serial(double delta, int n, std::span<const int> qs,
                                             std::span<const int> ds) {
  std::vector<DeltaSample> out;
  for (int q : qs)
    for (int d : ds) out.push_back(delta_sample(d, delta, n, q));
  return out;
}

BetaTildeEstimate fit_beta_tilde(std::span<const DeltaSample> samples) {
  if (samples.empty()) throw DomainError("fit_beta_tilde: no samples");
  const DeltaSample& head = samples.front();
  for (const auto& s : samples)
    if (s.n != head.n || s.q != head.q || s.delta != head.delta)
      throw DomainError("fit_beta_tilde: samples must share (delta, n, q)");

  const auto last = std::ranges::max_element(samples, {}, &DeltaSample::d);
  BetaTildeEstimate est;
  est.value = last->ratio();
  est.d_last = last->d;
  est.drift = std::numeric_limits<double>::quiet_NaN();
  est.richardson = std::numeric_limits<double>::quiet_NaN();
  for (const auto& s : samples) {
    if (2 * s.d != last->d) continue;
    est.drift = est.value - s.ratio();
    est.richardson = 2.0 * est.value - s.ratio();
  }
  return est;
}

}  // namespace hamming
