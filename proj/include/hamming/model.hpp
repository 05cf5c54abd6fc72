#pragma once

#include "hamming/log_value.hpp"
#include "hamming/specfun.hpp"

#include <optional>
#include <vector>

namespace hamming {

/// The Hamming graph H(d, q): d-tuples over an alphabet of size q.
struct GraphParams {
  int d;
  int q;

  /// Throws DomainError unless d >= 1 and q >= 2.
  GraphParams(int d, int q);

  BigInt vertex_count_exact() const;
  LogValue vertex_count() const;
  bool valid_mode(int k) const { return k >= 0 && k <= d; }

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

/// Distance-indexed hopping amplitudes alpha_0..alpha_d.
class HoppingModel {
 public:
  /// alpha_0 chemical potential, alpha_1 = 1, everything else zero.
  static HoppingModel nearest_neighbor(double alpha0, const GraphParams& g);
  /// alpha_i = exp(-c i) for i > 0.
  static HoppingModel exponential(double alpha0, double c, const GraphParams& g);
  static HoppingModel from_alphas(std::vector<double> alphas);

  const std::vector<double>& alphas() const { return alphas_; }
  int diameter() const { return static_cast<int>(alphas_.size()) - 1; }

 private:
  explicit HoppingModel(std::vector<double> alphas) : alphas_(std::move(alphas)) {}
  std::vector<double> alphas_;
};

/// Modes k with eps_k <= 0. `contiguous_k0` is set iff members == {0..k0}.
struct FermiSet {
  std::vector<int> members;
  std::optional<int> contiguous_k0;
  /// Some mode sits at |eps_k| < 1e-12; the filled ground state is then one
  /// of several degenerate ones.
  bool degenerate_ground_state = false;

  /// {0..k0}; k0 = -1 gives the empty set.
  static FermiSet contiguous(int k0, const GraphParams& g);
  /// Any subset of {0..d}; sorts, deduplicates and detects contiguity.
  static FermiSet from_members(std::vector<int> members, const GraphParams& g);

  bool empty() const { return members.empty(); }
  bool contains(int k) const;
};

inline constexpr double kZeroEnergyTolerance = 1e-12;

/// omega_k = kq - d.
long adjacency_eigenvalue(int k, const GraphParams& g);
/// D_k = C(d, k) (q-1)^(d-k).
BigInt adjacency_degeneracy(int k, const GraphParams& g);

/// eps_k = sum_i alpha_i C(d,i) (q-1)^i K_i(d-k). Each integer coefficient
/// C(d,i)(q-1)^i K_i is exact; the dot product with alpha is exact and
/// rounded once. Zero amplitudes are skipped.
double single_particle_energy(const HoppingModel& m, int k, const GraphParams& g);

/// floor((d - alpha0)/q) clamped into [-1, d]; -1 encodes F = {}.
int nn_fermi_k0(double alpha0, const GraphParams& g);
/// Fermi momentum of the exponential model. alpha0 >= 1 gives -1 (no
/// negative energies); c <= 0 is a DomainError.
int lr_fermi_k0(double alpha0, double c, const GraphParams& g);

FermiSet fermi_set(const HoppingModel& m, const GraphParams& g);

/// nu_F = sum_{k in F} D_k / q^d, exact rational rounded once.
double filling_fraction(const FermiSet& f, const GraphParams& g);

}  // namespace hamming
