#include "hamming/measures.hpp"

#include "hamming/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hamming {

namespace {

constexpr double kPlainLnLimit = 700.0;

BigInt int_pow(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

void require_k0(int k0, const GraphParams& g) {
  if (k0 < -1 || k0 > g.d) throw DomainError("k0 must lie in [-1, d]");
}

// Range of i in 1..r whose weight C(L, d-i-k0) is nonzero.
struct BoundaryRange {
  int lo;
  int hi;
};

BoundaryRange boundary_range(int r, int k0, const GraphParams& g) {
  const int L = g.d - r;
  return {std::max(1, g.d - k0 - L), std::min(r, g.d - k0)};
}

double ln_weight(int i, int r, int k0, const GraphParams& g) {
  const int t = g.d - i - k0;
  return ln_binomial(g.d - r, t) + t * std::log(static_cast<double>(g.q - 1));
}

BigInt exact_weight(int i, int r, int k0, const GraphParams& g) {
  const int t = g.d - i - k0;
  return binomial_exact(g.d - r, t) * int_pow(g.q - 1, t);
}

WideReal weighted_bracket_sum(int r, int k0, const GraphParams& g, std::span<const BracketTerm> terms,
                              mpfr_prec_t bits) {
  WideReal total(bits);
  const auto range = boundary_range(r, k0, g);
  if (range.lo > range.hi) return total;
  const auto brackets = bracket_values(g.q, r, terms, bits);
  for (int i = range.lo; i <= range.hi; ++i) {
    const WideReal& bracket = brackets[static_cast<std::size_t>(i - 1)];
    if (bracket.is_zero()) continue;
    total += WideReal(exact_weight(i, r, k0, g), bits) * bracket;
  }
  return total;
}

void require_tripartite(int r, const GraphParams& g) {
  if (g.q == 2) throw UnsupportedGeometry("tripartite undefined for q=2");
  SubsystemSpec{3, r}.validate(g);
}

}  // namespace

std::vector<WideReal> bracket_values(int q, int r, std::span<const BracketTerm> terms, mpfr_prec_t bits) {
  std::vector<std::vector<UnitFraction>> coeffs;
  coeffs.reserve(terms.size());
  for (const auto& t : terms) coeffs.push_back(boundary_coefficients(t.n, q, r, t.j));
  std::vector<WideReal> out;
  out.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    WideReal bracket(bits);
    for (std::size_t f = 0; f < terms.size(); ++f) {
      const UnitFraction& x = coeffs[f][static_cast<std::size_t>(i - 1)];
      if (x.is_zero() || x.is_one()) continue;
      bracket += WideReal(terms[f].coefficient, bits) * x.entropy_wide(bits);
    }
    out.push_back(std::move(bracket));
  }
  return out;
}

EntropyResult EntropyResult::from(LogValue v) {
  EntropyResult out;
  out.value_log = v;
  if (v.is_zero())
    out.value = 0.0;
  else if (v.ln_mag < kPlainLnLimit)
    out.value = v.value();
  return out;
}

mpfr_prec_t information_precision(int q, int r) {
  return static_cast<mpfr_prec_t>(2.0 * std::ceil(r * std::log2(static_cast<double>(q)))) + 160;
}

EntropyResult entropy_from_spectrum(std::span<const SpectrumEntry> spectrum) {
  std::vector<LogValue> terms;
  terms.reserve(spectrum.size());
  for (const auto& entry : spectrum) {
    if (sgn(entry.multiplicity) == 0) continue;
    const double s = entry.lambda.entropy();
    if (s <= 0.0) continue;
    terms.push_back(LogValue::from_integer(entry.multiplicity) * LogValue::from_double(s));
  }
  return EntropyResult::from(log_sum(terms));
}

WideReal entropy_from_spectrum_wide(std::span<const SpectrumEntry> spectrum, mpfr_prec_t bits) {
  WideReal total(bits);
  for (const auto& entry : spectrum) {
    if (sgn(entry.multiplicity) == 0 || entry.lambda.is_zero() || entry.lambda.is_one()) continue;
    total += WideReal(entry.multiplicity, bits) * entry.lambda.entropy_wide(bits);
  }
  return total;
}

double entropy_from_eigenvalues(std::span<const double> eigenvalues, double tolerance) {
  double total = 0.0;
  for (double x : eigenvalues) {
    if (std::isnan(x) || x < -tolerance || x > 1.0 + tolerance)
      throw DomainError("entropy_from_eigenvalues: eigenvalue outside [0, 1]: " + std::to_string(x));
    total += binary_entropy(std::clamp(x, 0.0, 1.0));
  }
  return total;
}

EntropyResult entropy_closed_form(const SubsystemSpec& s, int k0, const GraphParams& g) {
  s.validate(g);
  require_k0(k0, g);
  const auto range = boundary_range(s.r, k0, g);
  std::vector<LogValue> terms;
  if (range.lo <= range.hi) {
    const auto f0 = boundary_coefficients(s.n, g.q, s.r, 0);
    const auto f1 = boundary_coefficients(s.n, g.q, s.r, 1);
    for (int i = range.lo; i <= range.hi; ++i) {
      const auto idx = static_cast<std::size_t>(i - 1);
      const double bracket = f0[idx].entropy() + (s.n - 1) * f1[idx].entropy();
      if (bracket <= 0.0) continue;
      terms.push_back(LogValue::from_log(1, ln_weight(i, s.r, k0, g) + std::log(bracket)));
    }
  }
  EntropyResult out = EntropyResult::from(log_sum(terms));
  add_entropy_normalizations(out, s, g);
  return out;
}

WideReal entropy_closed_form_wide(const SubsystemSpec& s, int k0, const GraphParams& g, mpfr_prec_t bits) {
  s.validate(g);
  require_k0(k0, g);
  const BracketTerm terms[] = {{s.n, 0, 1}, {s.n, 1, s.n - 1}};
  return weighted_bracket_sum(s.r, k0, g, std::span(terms, s.n > 1 ? 2 : 1), bits);
}

EntropyResult entropy(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g) {
  if (f.empty()) {
    s.validate(g);
    EntropyResult out = EntropyResult::from(LogValue::zero());
    add_entropy_normalizations(out, s, g);
    return out;
  }
  if (f.contiguous_k0) return entropy_closed_form(s, *f.contiguous_k0, g);
  const auto spectrum = nontrivial_spectrum(s, f, g);
  EntropyResult out = entropy_from_spectrum(spectrum);
  add_entropy_normalizations(out, s, g);
  return out;
}

EntropyResult mutual_information(int r, int k0, const GraphParams& g) {
  SubsystemSpec{2, r}.validate(g);
  require_k0(k0, g);
  const WideReal total = weighted_bracket_sum(r, k0, g, kMutualBracket, information_precision(g.q, r));
  EntropyResult out = EntropyResult::from(total.to_log_value());
  add_information_normalization(out, r, g);
  return out;
}

EntropyResult mutual_information_definitional(int r, int k0, const GraphParams& g) {
  SubsystemSpec{2, r}.validate(g);
  const mpfr_prec_t bits = information_precision(g.q, r);
  const WideReal s1 = entropy_closed_form_wide({1, r}, k0, g, bits);
  const WideReal s2 = entropy_closed_form_wide({2, r}, k0, g, bits);
  EntropyResult out = EntropyResult::from((WideReal(2L, bits) * s1 - s2).to_log_value());
  add_information_normalization(out, r, g);
  return out;
}

EntropyResult mutual_information(int r, const FermiSet& f, const GraphParams& g) {
  if (f.empty()) return mutual_information(r, -1, g);
  if (f.contiguous_k0) return mutual_information(r, *f.contiguous_k0, g);
  SubsystemSpec{2, r}.validate(g);
  const mpfr_prec_t bits = information_precision(g.q, r);
  const WideReal s1 = entropy_from_spectrum_wide(nontrivial_spectrum({1, r}, f, g), bits);
  const WideReal s2 = entropy_from_spectrum_wide(nontrivial_spectrum({2, r}, f, g), bits);
  EntropyResult out = EntropyResult::from((WideReal(2L, bits) * s1 - s2).to_log_value());
  add_information_normalization(out, r, g);
  return out;
}

EntropyResult tripartite_information(int r, int k0, const GraphParams& g) {
  require_tripartite(r, g);
  require_k0(k0, g);
  const WideReal total = weighted_bracket_sum(r, k0, g, kTripartiteBracket, information_precision(g.q, r));
  EntropyResult out = EntropyResult::from(total.to_log_value());
  add_information_normalization(out, r, g);
  return out;
}

EntropyResult tripartite_information_definitional(int r, int k0, const GraphParams& g) {
  require_tripartite(r, g);
  const mpfr_prec_t bits = information_precision(g.q, r);
  const WideReal s1 = entropy_closed_form_wide({1, r}, k0, g, bits);
  const WideReal s2 = entropy_closed_form_wide({2, r}, k0, g, bits);
  const WideReal s3 = entropy_closed_form_wide({3, r}, k0, g, bits);
  const WideReal three(3L, bits);
  EntropyResult out = EntropyResult::from((three * s1 - three * s2 + s3).to_log_value());
  add_information_normalization(out, r, g);
  return out;
}

EntropyResult tripartite_information_via_mutual(int r, int k0, const GraphParams& g) {
  require_tripartite(r, g);
  const mpfr_prec_t bits = information_precision(g.q, r);
  const WideReal i2 = weighted_bracket_sum(r, k0, g, kMutualBracket, bits);
  const WideReal s1 = entropy_closed_form_wide({1, r}, k0, g, bits);
  const WideReal s2 = entropy_closed_form_wide({2, r}, k0, g, bits);
  const WideReal s3 = entropy_closed_form_wide({3, r}, k0, g, bits);
  const WideReal i2_to_pair = s1 + s2 - s3;
  EntropyResult out = EntropyResult::from((i2 + i2 - i2_to_pair).to_log_value());
  add_information_normalization(out, r, g);
  return out;
}

EntropyResult tripartite_information(int r, const FermiSet& f, const GraphParams& g) {
  if (f.empty()) return tripartite_information(r, -1, g);
  if (f.contiguous_k0) return tripartite_information(r, *f.contiguous_k0, g);
  require_tripartite(r, g);
  const mpfr_prec_t bits = information_precision(g.q, r);
  const WideReal s1 = entropy_from_spectrum_wide(nontrivial_spectrum({1, r}, f, g), bits);
  const WideReal s2 = entropy_from_spectrum_wide(nontrivial_spectrum({2, r}, f, g), bits);
  const WideReal s3 = entropy_from_spectrum_wide(nontrivial_spectrum({3, r}, f, g), bits);
  const WideReal three(3L, bits);
  EntropyResult out = EntropyResult::from((three * s1 - three * s2 + s3).to_log_value());
  add_information_normalization(out, r, g);
  return out;
}

LogValue proportionality_deviation(const SubsystemSpec& s, int k0, const GraphParams& g) {
  const mpfr_prec_t bits = information_precision(g.q, s.r);
  const WideReal sn = entropy_closed_form_wide(s, k0, g, bits);
  const WideReal s1 = entropy_closed_form_wide({1, s.r}, k0, g, bits);
  return (sn - WideReal(static_cast<long>(s.n), bits) * s1).to_log_value();
}

void add_entropy_normalizations(EntropyResult& result, const SubsystemSpec& s, const GraphParams& g) {
  const double lnq = std::log(static_cast<double>(g.q));
  const double lnd = std::log(static_cast<double>(g.d));
  const auto geometry = subsystem_geometry(s, g);
  const auto ratio = [&](double ln_scale) {
    return result.value_log.is_zero() ? 0.0 : result.value_log.sign * std::exp(result.value_log.ln_mag - ln_scale);
  };
  result.normalizations[norm::kR1Scale] = ratio((g.d - 1) * lnq - 0.5 * lnd);
  result.normalizations[norm::kVolumeScale] =
      ratio(geometry.volume.ln_mag + 0.5 * (std::log(static_cast<double>(s.r)) - lnd));
}

void add_information_normalization(EntropyResult& result, int r, const GraphParams& g) {
  const double ln_scale = (g.d - r) * std::log(static_cast<double>(g.q)) - 0.5 * std::log(static_cast<double>(g.d));
  result.normalizations[norm::kInfoScale] =
      result.value_log.is_zero() ? 0.0 : result.value_log.sign * std::exp(result.value_log.ln_mag - ln_scale);
}

}  // namespace hamming
