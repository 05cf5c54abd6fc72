#pragma once

#include "hamming/model.hpp"

#include <vector>

namespace hamming {

/// n disjoint copies of H(d-r, q) inside H(d, q): block j fixes the first r
/// letters to j-1. Blocks sit at mutual distance r.
struct SubsystemSpec {
  int n;
  int r;

  int block_diameter(const GraphParams& g) const { return g.d - r; }
  /// Throws DomainError unless 1 <= n <= q and 1 <= r <= d.
  void validate(const GraphParams& g) const;
};

struct SubsystemGeometry {
  BigInt volume_exact;       // n q^(d-r)
  BigInt boundary_exact;     // (q-1) r n q^(d-r)
  LogValue volume;
  LogValue boundary_area;
  double volume_ratio;       // n q^(-r)
};

SubsystemGeometry subsystem_geometry(const SubsystemSpec& s, const GraphParams& g);

/// One distinct eigenvalue of C_A with its multiplicity. Labels: Q counts
/// uniform factors in the block part, e = 0 for the symmetric block
/// combination and e = 1 for the other n-1.
struct SpectrumEntry {
  UnitFraction lambda;
  BigInt multiplicity;
  int Q;
  int e;
};

/// Lambda_{Q,e} as an exact fraction over q^r. The k-range Q..Q+r is
/// intersected with {0..d}.
UnitFraction lambda_exact(int Q, int e, const SubsystemSpec& s, const FermiSet& f, const GraphParams& g);
double lambda_eigenvalue(int Q, int e, const SubsystemSpec& s, const FermiSet& f, const GraphParams& g);

/// F^{(n)}_{i,j} for i = 1..r as exact fractions over q^r (element i-1).
/// Depends only on (n, q, r).
std::vector<UnitFraction> boundary_coefficients(int n, int q, int r, int j);
UnitFraction boundary_coefficient_exact(int i, int j, const SubsystemSpec& s, const GraphParams& g);
double boundary_coefficient(int i, int j, const SubsystemSpec& s, const GraphParams& g);

/// Block degeneracy D_Q = C(L, Q) (q-1)^(L-Q) with L = d - r.
BigInt block_degeneracy(int Q, const SubsystemSpec& s, const GraphParams& g);

/// All (Lambda_{Q,0}, D_Q) and, for n > 1, (Lambda_{Q,1}, (n-1) D_Q) for
/// Q = 0..L. Multiplicities sum to n q^L.
std::vector<SpectrumEntry> chopped_spectrum(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g);

/// Entries with 0 < Lambda < 1 only; for contiguous F only Q in
/// k0-r+1..min(k0, L) is visited.
std::vector<SpectrumEntry> nontrivial_spectrum(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g);

}  // namespace hamming
