#pragma once

#include "hamming/subsystem.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamming {

/// Entropy-like quantity in nats. `value` is present when it fits in a
/// double; `normalizations` holds the dimensionless ratios used for plots.
struct EntropyResult {
  LogValue value_log;
  std::optional<double> value;
  std::map<std::string, double> normalizations;

  static EntropyResult from(LogValue v);
};

namespace norm {
inline constexpr const char* kR1Scale = "S/(q^(d-1) d^(-1/2))";
inline constexpr const char* kVolumeScale = "S/(V_A (r/d)^(1/2))";
inline constexpr const char* kDeltaScale = "S/(V_A (1-delta)^(1/2))";
inline constexpr const char* kInfoScale = "I/(q^(d-r) d^(-1/2))";
}  // namespace norm

/// One family F^{(n)}_{i,j} with its integer coefficient inside a bracket.
struct BracketTerm {
  int n;
  int j;
  long coefficient;
};

/// 2s(F^(1)_{i,0}) - s(F^(2)_{i,0}) - s(F^(2)_{i,1}).
inline constexpr BracketTerm kMutualBracket[] = {{1, 0, 2}, {2, 0, -1}, {2, 1, -1}};
/// 3s(F^(1)_{i,0}) - 3s(F^(2)_{i,0}) - 3s(F^(2)_{i,1}) + s(F^(3)_{i,0}) + 2s(F^(3)_{i,1}).
inline constexpr BracketTerm kTripartiteBracket[] = {{1, 0, 3}, {2, 0, -3}, {2, 1, -3}, {3, 0, 1}, {3, 1, 2}};

/// Bracket values for i = 1..r (element i-1), each sum_f c_f s(F_f) in MPFR.
std::vector<WideReal> bracket_values(int q, int r, std::span<const BracketTerm> terms, mpfr_prec_t bits);

/// Bits of MPFR precision used for the information measures at separation
/// r: enough to resolve brackets of relative size q^(-2r).
mpfr_prec_t information_precision(int q, int r);

/// sum multiplicity * s(Lambda), accumulated in log space.
EntropyResult entropy_from_spectrum(std::span<const SpectrumEntry> spectrum);
WideReal entropy_from_spectrum_wide(std::span<const SpectrumEntry> spectrum, mpfr_prec_t bits);

/// sum_x s(x) over plain eigenvalues. Values within `tolerance` of [0, 1]
/// are clamped; anything further out is a DomainError.
double entropy_from_eigenvalues(std::span<const double> eigenvalues, double tolerance = 1e-12);

/// Closed form for contiguous F = {0..k0}:
/// sum_{i=1}^{r} C(L, d-i-k0) (q-1)^(d-i-k0) (s(F_{i,0}) + (n-1) s(F_{i,1})).
/// k0 = -1 (empty F) is accepted and gives zero.
EntropyResult entropy_closed_form(const SubsystemSpec& s, int k0, const GraphParams& g);
WideReal entropy_closed_form_wide(const SubsystemSpec& s, int k0, const GraphParams& g, mpfr_prec_t bits);

/// Entropy of n blocks for any Fermi set: closed form when F is contiguous,
/// otherwise the spectrum sum.
EntropyResult entropy(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g);

/// I_2(A_1:A_2) by the bracket sum 2s(F^(1)_{i,0}) - s(F^(2)_{i,0}) - s(F^(2)_{i,1}).
EntropyResult mutual_information(int r, int k0, const GraphParams& g);
/// I_2 = 2 S(1 block) - S(2 blocks), each entropy summed first.
EntropyResult mutual_information_definitional(int r, int k0, const GraphParams& g);
/// Arbitrary F through the spectrum entropies.
EntropyResult mutual_information(int r, const FermiSet& f, const GraphParams& g);

/// I_3 by the bracket sum 3s(F^(1)_{i,0}) - 3s(F^(2)_{i,0}) - 3s(F^(2)_{i,1})
/// + s(F^(3)_{i,0}) + 2s(F^(3)_{i,1}). Signed. q = 2 is UnsupportedGeometry.
EntropyResult tripartite_information(int r, int k0, const GraphParams& g);
/// I_3 = 3 S(1) - 3 S(2) + S(3).
EntropyResult tripartite_information_definitional(int r, int k0, const GraphParams& g);
/// I_3 = I_2(A1:A2) + I_2(A1:A3) - I_2(A1:A2 u A3), with the first two from
/// the bracket sum and the last from S(1) + S(2) - S(3).
EntropyResult tripartite_information_via_mutual(int r, int k0, const GraphParams& g);
EntropyResult tripartite_information(int r, const FermiSet& f, const GraphParams& g);

/// S(n blocks) - n S(1 block). Diagnostic only.
LogValue proportionality_deviation(const SubsystemSpec& s, int k0, const GraphParams& g);

/// Fills the entropy ratios of `result` that make sense for (s, g).
void add_entropy_normalizations(EntropyResult& result, const SubsystemSpec& s, const GraphParams& g);
void add_information_normalization(EntropyResult& result, int r, const GraphParams& g);

}  // namespace hamming
