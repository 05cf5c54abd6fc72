#include "hamming/subsystem.hpp"

#include "hamming/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hamming {

namespace {

BigInt int_pow(long base, long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

// (n delta_{e,0} - 1): weight of the alternating sum.
long alternating_weight(int n, int e) { return (e == 0 ? n : 0) - 1; }

void require_label(int e, const SubsystemSpec& s) {
  if (e != 0 && e != 1) throw DomainError("spectrum label e must be 0 or 1");
  if (e == 1 && s.n == 1) throw DomainError("n = 1 has no e = 1 eigenvalues");
}

}  // namespace

void SubsystemSpec::validate(const GraphParams& g) const {
  if (n < 1) throw DomainError("subsystem: n must be >= 1");
  if (n > g.q) throw DomainError("subsystem: n = " + std::to_string(n) + " exceeds q = " + std::to_string(g.q));
  if (r < 1 || r > g.d) throw DomainError("subsystem: r must satisfy 1 <= r <= d");
}

SubsystemGeometry subsystem_geometry(const SubsystemSpec& s, const GraphParams& g) {
  s.validate(g);
  SubsystemGeometry out;
  out.volume_exact = BigInt(s.n) * int_pow(g.q, g.d - s.r);
  out.boundary_exact = BigInt(g.q - 1) * BigInt(s.r) * out.volume_exact;
  const double lnq = std::log(static_cast<double>(g.q));
  out.volume = LogValue::from_log(1, std::log(static_cast<double>(s.n)) + (g.d - s.r) * lnq);
  out.boundary_area = LogValue::from_log(1, std::log(static_cast<double>((g.q - 1) * s.r)) + out.volume.ln_mag);
  out.volume_ratio = std::exp(std::log(static_cast<double>(s.n)) - s.r * lnq);
  return out;
}

UnitFraction lambda_exact(int Q, int e, const SubsystemSpec& s, const FermiSet& f, const GraphParams& g) {
  s.validate(g);
  require_label(e, s);
  const int L = s.block_diameter(g);
  if (Q < 0 || Q > L) throw DomainError("lambda: Q outside [0, L]");

  const long weight = alternating_weight(s.n, e);
  BigInt num = 0;
  for (int k : f.members) {
    if (k < Q || k > Q + s.r) continue;
    const int m = k - Q;  // C(r, k-Q), exponent r-k+Q = r-m
    const BigInt parity = ((s.r - m) % 2 == 0) ? 1 : -1;
    num += binomial_exact(s.r, m) * (int_pow(g.q - 1, s.r - m) + weight * parity);
  }
  return UnitFraction(std::move(num), int_pow(g.q, s.r));
}

double lambda_eigenvalue(int Q, int e, const SubsystemSpec& s, const FermiSet& f, const GraphParams& g) {
  return lambda_exact(Q, e, s, f, g).value();
}

std::vector<UnitFraction> boundary_coefficients(int n, int q, int r, int j) {
  if (r < 1) throw DomainError("boundary_coefficients: r must be >= 1");
  if (j != 0 && j != 1) throw DomainError("boundary_coefficients: j must be 0 or 1");
  const long weight = alternating_weight(n, j);
  const BigInt den = int_pow(q, r);

  // F_i = sum_{m=0}^{r-i} C(r,m) ((q-1)^(r-m) + weight (-1)^(r-m)); build the
  // prefix over m once and read F_i off at m = r-i.
  std::vector<BigInt> pow_qm1(static_cast<std::size_t>(r) + 1);
  pow_qm1[0] = 1;
  for (int t = 1; t <= r; ++t) pow_qm1[static_cast<std::size_t>(t)] = pow_qm1[static_cast<std::size_t>(t) - 1] * (q - 1);

  std::vector<UnitFraction> out;
  out.reserve(static_cast<std::size_t>(r));
  std::vector<BigInt> prefix(static_cast<std::size_t>(r));
  BigInt binom = 1;
  BigInt acc = 0;
  for (int m = 0; m <= r - 1; ++m) {
    const BigInt parity = ((r - m) % 2 == 0) ? 1 : -1;
    acc += binom * (pow_qm1[static_cast<std::size_t>(r - m)] + weight * parity);
    prefix[static_cast<std::size_t>(m)] = acc;
    binom = binom * (r - m) / (m + 1);
  }
  for (int i = 1; i <= r; ++i) out.emplace_back(prefix[static_cast<std::size_t>(r - i)], den);
  return out;
}

UnitFraction boundary_coefficient_exact(int i, int j, const SubsystemSpec& s, const GraphParams& g) {
  s.validate(g);
  if (i < 1 || i > s.r) throw DomainError("boundary_coefficient: i outside [1, r]");
  if (j != 0 && j != 1) throw DomainError("boundary_coefficient: j must be 0 or 1");
  const long weight = alternating_weight(s.n, j);
  BigInt num = 0;
  for (int m = 0; m <= s.r - i; ++m) {
    const BigInt parity = ((s.r - m) % 2 == 0) ? 1 : -1;
    num += binomial_exact(s.r, m) * (int_pow(g.q - 1, s.r - m) + weight * parity);
  }
  return UnitFraction(std::move(num), int_pow(g.q, s.r));
}

double boundary_coefficient(int i, int j, const SubsystemSpec& s, const GraphParams& g) {
  return boundary_coefficient_exact(i, j, s, g).value();
}

BigInt block_degeneracy(int Q, const SubsystemSpec& s, const GraphParams& g) {
  const int L = s.block_diameter(g);
  if (Q < 0 || Q > L) return 0;
  return binomial_exact(L, Q) * int_pow(g.q - 1, L - Q);
}

namespace {

void append_entries(std::vector<SpectrumEntry>& out, int Q, const UnitFraction& l0, const UnitFraction* l1,
                    const SubsystemSpec& s, const GraphParams& g) {
  const BigInt dq = block_degeneracy(Q, s, g);
  out.push_back({l0, dq, Q, 0});
  if (s.n > 1) out.push_back({*l1, BigInt(s.n - 1) * dq, Q, 1});
}

}  // namespace

std::vector<SpectrumEntry> chopped_spectrum(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g) {
  s.validate(g);
  const int L = s.block_diameter(g);
  const BigInt den = int_pow(g.q, s.r);
  const UnitFraction zero(0, den);
  const UnitFraction one(den, den);

  std::vector<SpectrumEntry> out;
  out.reserve(static_cast<std::size_t>(L + 1) * (s.n > 1 ? 2 : 1));
  for (int Q = 0; Q <= L; ++Q) {
    if (f.contiguous_k0 && Q > *f.contiguous_k0) {
      append_entries(out, Q, zero, &zero, s, g);
    } else if (f.contiguous_k0 && Q <= *f.contiguous_k0 - s.r) {
      append_entries(out, Q, one, &one, s, g);
    } else if (f.empty()) {
      append_entries(out, Q, zero, &zero, s, g);
    } else {
      const UnitFraction l0 = lambda_exact(Q, 0, s, f, g);
      if (s.n > 1) {
        const UnitFraction l1 = lambda_exact(Q, 1, s, f, g);
        append_entries(out, Q, l0, &l1, s, g);
      } else {
        append_entries(out, Q, l0, nullptr, s, g);
      }
    }
  }
  return out;
}

std::vector<SpectrumEntry> nontrivial_spectrum(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g) {
  s.validate(g);
  const int L = s.block_diameter(g);
  int lo = 0;
  int hi = L;
  if (f.contiguous_k0) {
    lo = std::max(0, *f.contiguous_k0 - s.r + 1);
    hi = std::min(*f.contiguous_k0, L);
  }
  std::vector<SpectrumEntry> out;
  if (f.empty()) return out;
  for (int Q = lo; Q <= hi; ++Q) {
    for (int e = 0; e <= (s.n > 1 ? 1 : 0); ++e) {
      UnitFraction lambda = lambda_exact(Q, e, s, f, g);
      if (lambda.is_zero() || lambda.is_one()) continue;
      BigInt mult = block_degeneracy(Q, s, g);
      if (e == 1) mult *= s.n - 1;
      out.push_back({std::move(lambda), std::move(mult), Q, e});
    }
  }
  return out;
}

}  // namespace hamming
