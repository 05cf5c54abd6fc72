#include "hamming/model.hpp"

#include "hamming/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hamming {

namespace {

void require_mode(int k, const GraphParams& g, const char* what) {
  if (!g.valid_mode(k))
    throw DomainError(std::string(what) + ": mode index " + std::to_string(k) + " outside [0, " +
                      std::to_string(g.d) + "]");
}

BigInt int_pow(long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

int clamp_k0(double raw, const GraphParams& g) {
  if (std::isnan(raw)) throw DomainError("Fermi momentum is NaN");
  if (raw < 0) return -1;
  if (raw >= g.d) return g.d;
  return static_cast<int>(raw);
}

}  // namespace

GraphParams::GraphParams(int d_, int q_) : d(d_), q(q_) {
  if (d < 1) throw DomainError("GraphParams: d must be >= 1");
  if (q < 2) throw DomainError("GraphParams: q must be >= 2");
}

BigInt GraphParams::vertex_count_exact() const { return int_pow(q, static_cast<unsigned long>(d)); }

LogValue GraphParams::vertex_count() const { return LogValue::from_log(1, d * std::log(static_cast<double>(q))); }

HoppingModel HoppingModel::nearest_neighbor(double alpha0, const GraphParams& g) {
  std::vector<double> a(static_cast<std::size_t>(g.d) + 1, 0.0);
  a[0] = alpha0;
  a[1] = 1.0;
  return HoppingModel(std::move(a));
}

HoppingModel HoppingModel::exponential(double alpha0, double c, const GraphParams& g) {
  if (!(c >= 0)) throw DomainError("exponential model: c must be >= 0");
  std::vector<double> a(static_cast<std::size_t>(g.d) + 1);
  a[0] = alpha0;
  for (int i = 1; i <= g.d; ++i) a[static_cast<std::size_t>(i)] = std::exp(-c * i);
  return HoppingModel(std::move(a));
}

HoppingModel HoppingModel::from_alphas(std::vector<double> alphas) {
  if (alphas.size() < 2) throw DomainError("hopping model needs alpha_0..alpha_d with d >= 1");
  for (double a : alphas)
    if (!std::isfinite(a)) throw DomainError("hopping amplitudes must be finite");
  return HoppingModel(std::move(alphas));
}

FermiSet FermiSet::contiguous(int k0, const GraphParams& g) {
  if (k0 < -1 || k0 > g.d) throw DomainError("FermiSet: k0 outside [-1, d]");
  FermiSet f;
  for (int k = 0; k <= k0; ++k) f.members.push_back(k);
  if (k0 >= 0) f.contiguous_k0 = k0;
  return f;
}

FermiSet FermiSet::from_members(std::vector<int> members, const GraphParams& g) {
  std::ranges::sort(members);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int k : members) require_mode(k, g, "FermiSet");
  FermiSet f;
  f.members = std::move(members);
  if (!f.members.empty() && f.members.front() == 0 && f.members.back() == static_cast<int>(f.members.size()) - 1)
    f.contiguous_k0 = f.members.back();
  return f;
}

bool FermiSet::contains(int k) const { return std::ranges::binary_search(members, k); }

long adjacency_eigenvalue(int k, const GraphParams& g) {
  require_mode(k, g, "adjacency_eigenvalue");
  return static_cast<long>(k) * g.q - g.d;
}

BigInt adjacency_degeneracy(int k, const GraphParams& g) {
  require_mode(k, g, "adjacency_degeneracy");
  return binomial_exact(g.d, k) * int_pow(g.q - 1, static_cast<unsigned long>(g.d - k));
}

double single_particle_energy(const HoppingModel& m, int k, const GraphParams& g) {
  if (m.diameter() != g.d)
    throw DomainError("single_particle_energy: model has " + std::to_string(m.alphas().size()) +
                      " amplitudes, graph needs " + std::to_string(g.d + 1));
  require_mode(k, g, "single_particle_energy");

  Rational eps = 0;
  for (int i = 0; i <= g.d; ++i) {
    const double alpha = m.alphas()[static_cast<std::size_t>(i)];
    if (alpha == 0.0) continue;
    const Rational coefficient =
        Rational(binomial_exact(g.d, i) * int_pow(g.q - 1, static_cast<unsigned long>(i))) *
        krawtchouk_exact(i, g.d - k, g.q, g.d);
    eps += Rational(alpha) * coefficient;
  }
  return eps.get_d();
}

int nn_fermi_k0(double alpha0, const GraphParams& g) {
  return clamp_k0(std::floor((g.d - alpha0) / g.q), g);
}

int lr_fermi_k0(double alpha0, double c, const GraphParams& g) {
  if (!(c > 0)) throw DomainError("lr_fermi_k0: c must be > 0");
  if (alpha0 >= 1.0) return -1;
  const double e = std::exp(-c);
  const double num = std::log1p(-alpha0) - g.d * std::log1p(-e);
  const double den = std::log1p(e * (g.q - 1)) - std::log1p(-e);
  return clamp_k0(std::floor(num / den), g);
}

FermiSet fermi_set(const HoppingModel& m, const GraphParams& g) {
  std::vector<int> members;
  bool degenerate = false;
  for (int k = 0; k <= g.d; ++k) {
    const double eps = single_particle_energy(m, k, g);
    if (std::abs(eps) < kZeroEnergyTolerance) degenerate = true;
    if (eps <= kZeroEnergyTolerance) members.push_back(k);
  }
  FermiSet f = FermiSet::from_members(std::move(members), g);
  f.degenerate_ground_state = degenerate;
  return f;
}

double filling_fraction(const FermiSet& f, const GraphParams& g) {
  BigInt filled = 0;
  for (int k : f.members) filled += adjacency_degeneracy(k, g);
  Rational nu(filled, g.vertex_count_exact());
  nu.canonicalize();
  return nu.get_d();
}

}  // namespace hamming
