// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run everything
//   acceptance --only ID  run one criterion (1, 2, 3, 4, 5a, 5b, 6, ..., 11)
//
// The exit code is nonzero iff a selected criterion failed.
// HAMMING_ACCEPT_FULL=1 additionally enumerates every d = 1 graph up to q = 1024.

#include "hamming/asymptotics.hpp"
#include "hamming/oracle.hpp"
#include "support/property_checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hamming;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

double rel_gap(const LogValue& a, const LogValue& b) {
  if (a.is_zero() || b.is_zero()) return (a.is_zero() && b.is_zero()) ? 0.0 : INFINITY;
  if (a.sign != b.sign) return INFINITY;
  return std::abs(std::expm1(a.ln_mag - b.ln_mag));
}

bool full_mode() {
  const char* env = std::getenv("HAMMING_ACCEPT_FULL");
  return env && std::strcmp(env, "1") == 0;
}

// Cached so that criteria 1 and 2 share one sweep when run together.
const SweepSummary& certification() {
  static const SweepSummary summary = [] {
    CertifyPlan plan;
    if (full_mode()) {
      plan.d1_full_q_max = 1024;
      plan.d1_tail_q.clear();
    }
    const auto instances = plan_instances(plan);
    return certify_sweep(instances);
  }();
  return summary;
}

Outcome oracle_equivalence() {
  const auto& s = certification();
  std::size_t spectrum_failures = 0;
  for (const auto& rep : s.reports)
    if (!rep.spectrum_match || !rep.multiplicity_match) ++spectrum_failures;
  const bool pass = spectrum_failures == 0 && s.max_eigen_deviation < 1e-8;
  std::string detail = std::to_string(s.reports.size()) + " instances on " + std::to_string(s.graphs) +
                       " graphs, max eigenvalue deviation " + fmt(s.max_eigen_deviation) + ", " +
                       std::to_string(spectrum_failures) + " spectrum mismatches";
  if (!full_mode()) detail += "; d = 1 graphs with 64 < q <= 1024 sampled at n in {1, 2, q/2, q-1, q} only";
  return {pass, detail};
}

Outcome entropy_cross_check() {
  const auto& s = certification();
  std::size_t entropy_failures = 0;
  for (const auto& rep : s.reports)
    if (!rep.entropy_match) ++entropy_failures;

  std::mt19937 rng(2024);
  double worst_internal = 0.0;
  for (int t = 0; t < 200; ++t) {
    const GraphParams g(std::uniform_int_distribution(1, 200)(rng), std::uniform_int_distribution(2, 8)(rng));
    const SubsystemSpec spec{std::uniform_int_distribution(1, g.q)(rng), std::uniform_int_distribution(1, g.d)(rng)};
    const int k0 = std::uniform_int_distribution(0, g.d)(rng);
    const auto closed = entropy_closed_form(spec, k0, g).value_log;
    const auto summed = entropy_from_spectrum(chopped_spectrum(spec, FermiSet::contiguous(k0, g), g)).value_log;
    worst_internal = std::max(worst_internal, rel_gap(closed, summed));
  }
  const bool pass = entropy_failures == 0 && s.max_entropy_deviation < 1e-9 && worst_internal < 1e-12;
  return {pass, "oracle max relative deviation " + fmt(s.max_entropy_deviation) + " (" +
                    std::to_string(entropy_failures) + " failures); spectrum-sum vs closed form max " +
                    fmt(worst_internal) + " on 200 instances"};
}

Outcome mutual_identity() {
  double worst = 0.0;
  for (int d = 4; d <= 64; d += 4) {
    const GraphParams g(d, 2);
    const int k0 = nn_fermi_k0(0.0, g);
    const auto i2 = mutual_information(1, k0, g).value_log;
    auto twice = entropy_closed_form({1, 1}, k0, g).value_log;
    twice.ln_mag += std::log(2.0);
    worst = std::max(worst, rel_gap(i2, twice));
  }
  return {worst < 1e-12, "max |I2 - 2 S(A1)| / 2 S(A1) = " + fmt(worst) + " over d = 4..64"};
}

Outcome tripartite_identity() {
  double worst = 0.0;
  for (int d = 3; d <= 60; d += 3) {
    const GraphParams g(d, 3);
    const int k0 = nn_fermi_k0(0.0, g);
    const auto i3 = tripartite_information(1, k0, g).value_log;
    const auto s1 = entropy_closed_form({1, 1}, k0, g).value_log;
    if (i3.is_zero()) continue;
    worst = std::max(worst, std::exp(i3.ln_mag - s1.ln_mag));
  }
  return {worst < 1e-12, "max |I3| / S(A1) = " + fmt(worst) + " over d = 3..60"};
}

Outcome half_filling(double alpha0) {
  std::vector<double> gaps;
  for (int d : {32, 64, 128}) {
    const GraphParams g(d, 4);
    gaps.push_back(std::abs(filling_fraction(fermi_set(HoppingModel::nearest_neighbor(alpha0, g), g), g) - 0.5));
  }
  const bool pass = gaps[1] < 0.05 && gaps[0] > gaps[1] && gaps[1] > gaps[2];
  return {pass, "|nu - 1/2| = " + fmt(gaps[0]) + ", " + fmt(gaps[1]) + ", " + fmt(gaps[2]) + " at d = 32, 64, 128"};
}

Outcome r1_asymptotics() {
  double worst = 0.0;
  std::string detail;
  for (auto [q, n] : {std::pair{2, 1}, {4, 2}, {4, 3}}) {
    const GraphParams g(400, q);
    const auto exact = entropy_closed_form({n, 1}, g.d / q, g).value_log;
    const double ratio = std::exp(exact.ln_mag - asymptotic_entropy_r1(n, g).ln_mag);
    worst = std::max(worst, std::abs(ratio - 1.0));
    detail += "(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ") " + fmt(ratio) + " ";
  }
  return {worst < 0.02, "exact/asymptotic at d = 400: " + detail};
}

Outcome f_constant() {
  const double value = f_coefficient(3, 4, 600) / (3 * std::sqrt(600.0));
  return {std::abs(value - 0.7203) <= 0.001, "f(3,4,600)/(3 sqrt 600) = " + fmt(value) + " (target 0.7203)"};
}

ScalingFit default_fit() {
  static const ScalingFit fit = fit_beta_gamma(scaling_samples(FitGrid{}));
  return fit;
}

Outcome beta_gamma() {
  const auto fit = default_fit();
  const bool pass = std::abs(fit.beta - 0.7203) <= 0.01 && std::abs(fit.gamma - 0.0278) <= 0.01;
  return {pass, "beta = " + fmt(fit.beta) + " (0.7203), gamma = " + fmt(fit.gamma) + " (0.0278), rms " +
                    fmt(fit.residual)};
}

Outcome beta_tilde() {
  const std::vector<int> qs{2, 3, 4};
  const std::vector<int> ds{480, 960, 1920, 3840};
  const auto fit = default_fit();
  bool pass = true;
  std::string detail;
  for (auto [delta, target, cross_target] : {std::tuple{0.2, 0.6988, 0.6981}, {0.4, 0.7043, 0.7036}}) {
    const auto samples = delta_samples(delta, 2, qs, ds);
    double sum = 0.0;
    for (int q : qs) {
      std::vector<DeltaSample> series;
      for (const auto& s : samples)
        if (s.q == q) series.push_back(s);
      sum += fit_beta_tilde(series).value;
    }
    const double value = sum / static_cast<double>(qs.size());
    const double cross = fit.beta - fit.gamma * (1.0 - delta);
    pass = pass && std::abs(value - target) <= 0.005 && std::abs(cross - cross_target) <= 0.005 &&
           std::abs(value - cross) <= 0.005;
    detail += "delta=" + fmt(delta) + ": " + fmt(value) + " (" + fmt(target) + "), beta - gamma(1-delta) = " +
              fmt(cross) + " (" + fmt(cross_target) + "); ";
  }
  return {pass, detail};
}

struct Regression {
  double slope;
  double r2;
};

Regression regress(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double cxx = sxx - sx * sx / n, cxy = sxy - sx * sy / n, cyy = syy - sy * sy / n;
  return {cxy / cxx, cxy * cxy / (cxx * cyy)};
}

Outcome information_decay() {
  std::vector<double> r, l2, l3;
  for (int k = 5; k <= 30; ++k) {
    r.push_back(k);
    l2.push_back(std::log(g2_coefficient(5, k)));
    // g3(5, r) changes sign along the range; the decay law is for |g3|.
    l3.push_back(std::log(std::abs(g3_coefficient(5, k))));
  }
  const auto f2 = regress(r, l2);
  const auto f3 = regress(r, l3);
  std::vector<double> lr, lg;
  for (int k = 50; k <= 500; k += 5) {
    lr.push_back(std::log(k));
    lg.push_back(std::log(g2_coefficient(2, k)));
  }
  const auto slope = regress(lr, lg).slope;
  const bool pass = f2.r2 > 0.99 && f3.r2 > 0.99 && std::abs(slope + 0.5) <= 0.05;
  return {pass, "R^2 log g2(5,r) = " + fmt(f2.r2) + ", log|g3(5,r)| = " + fmt(f3.r2) +
                    "; log-log slope of g2(2,r) = " + fmt(slope)};
}

Outcome property_suites() {
  bool pass = true;
  std::string detail;
  for (const auto& res : props::all_properties()) {
    pass = pass && res.ok;
    detail += res.name + (res.ok ? " ok" : " FAILED (" + res.detail + ")") + " [" + std::to_string(res.cases) +
              " cases, worst " + fmt(res.worst) + "]; ";
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::string> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--only ID]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {"1", "closed-form spectrum matches the dense oracle", oracle_equivalence},
      {"2", "closed-form entropy matches the oracle and the spectrum sum", entropy_cross_check},
      {"3", "I2 = 2 S(A1) at q = 2, r = 1", mutual_identity},
      {"4", "I3 = 0 at q = 3, r = 1", tripartite_identity},
      {"5a", "q = 4 filling approaches 1/2 (alpha0 = 1)", [] { return half_filling(1.0); }},
      {"5b", "q = 4 filling approaches 1/2 (alpha0 = 0)", [] { return half_filling(0.0); }},
      {"6", "r = 1 large-d asymptotics", r1_asymptotics},
      {"7", "finite-r constant f(3,4,600)", f_constant},
      {"8", "beta/gamma fit on the default grid", beta_gamma},
      {"9", "beta-tilde at delta = 1/5 and 2/5", beta_tilde},
      {"10", "exponential and power-law decay of g2, g3", information_decay},
      {"11", "property suites", property_suites},
  };

  bool any = false;
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only && *only != c.id) continue;
    any = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && out.pass;
    std::cout << (out.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << ": " << out.detail << " ["
              << fmt(secs) << " s]" << std::endl;
  }
  if (!any) {
    std::cerr << "unknown criterion " << *only << "\n";
    return 2;
  }
  if ((!only || *only == "1") && !full_mode())
    std::cout << "NOT RUN 1-tail  full enumeration of d = 1 graphs with 64 < q <= 1024 "
                 "(set HAMMING_ACCEPT_FULL=1)"
              << std::endl;
  return all_pass ? 0 : 1;
}
