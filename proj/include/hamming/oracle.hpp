#pragma once

// Brute-force ground truth on the full q^d-dimensional vertex space.
//
// Vertex v = (v_1..v_d) has index sum_i v_i q^(d-i), so letter 1 is the most
// significant digit and Kronecker factor i acts on letter i.

#include "hamming/measures.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hamming {

using DenseMatrix = Eigen::MatrixXd;

inline constexpr std::size_t kDefaultOracleCap = 4096;

/// HAMMING_ORACLE_CAP when set to a positive integer, else 4096.
std::size_t oracle_cap();

/// q^d as a size, or CapacityError when it exceeds `cap`.
std::size_t oracle_dimension(const GraphParams& g, std::size_t cap = oracle_cap());

struct DenseProjector {
  DenseMatrix matrix;
  GraphParams dims;
};

struct ProjectorCheck {
  double symmetry = 0.0;     // max |P - P^T|
  double idempotence = 0.0;  // ||P^2 - P|| in operator norm
  double spectrum = 0.0;     // max distance of an eigenvalue from {0, 1}
  bool ok() const { return symmetry <= 1e-12 && idempotence <= 1e-10 && spectrum <= 1e-8; }
};

ProjectorCheck check_projector(const DenseMatrix& p);

/// Sum over letters of 1 x .. x (J - 1) x .. x 1.
DenseMatrix build_adjacency_kronecker(const GraphParams& g);
/// A(v, w) = 1 iff v and w differ in exactly one letter.
DenseMatrix build_adjacency_distance(const GraphParams& g);
/// Both routes; ConsistencyError unless they agree entry for entry.
DenseMatrix build_adjacency(const GraphParams& g);

/// P_k for each requested k (element order follows `ks`), as the sum over
/// binary strings b of weight d-k of the Kronecker product with factor J/q
/// where b_i = 0 and 1 - J/q where b_i = 1. The parallel version splits over k.
std::vector<DenseMatrix> weight_projectors(const GraphParams& g, const std::vector<int>& ks);
std::vector<DenseMatrix> weight_projectors_serial(const GraphParams& g, const std::vector<int>& ks);

/// P_k for every k from the eigenvectors of the numerically diagonalized
/// adjacency matrix, grouped by the nearest omega_k. ConsistencyError when an
/// eigenvalue sits further than 1e-9 from every omega_k or a group size
/// differs from D_k.
std::vector<DenseMatrix> weight_projectors_spectral(const GraphParams& g);

/// Max |X - Y| over all P_k of the two routes.
double weight_projector_gap(std::span<const DenseMatrix> binary, std::span<const DenseMatrix> spectral);

inline constexpr double kProjectorRouteTolerance = 1e-9;

/// sum_{k in F} P_k from precomputed projectors indexed by k = 0..d.
DenseMatrix fermi_projector(const FermiSet& f, std::span<const DenseMatrix> by_k);

/// Binary-string pi_F, verified against the spectral route to 1e-9.
DenseProjector build_pi_F(const FermiSet& f, const GraphParams& g);

/// Sorted vertex indices.
struct VertexSubset {
  std::vector<std::size_t> vertices;

  /// Throws DomainError on duplicates or indices >= q^d.
  static VertexSubset from_indices(std::vector<std::size_t> indices, const GraphParams& g);
  /// Blocks j = 0..n-1 whose first r letters all equal j.
  static VertexSubset from_spec(const SubsystemSpec& s, const GraphParams& g);
  VertexSubset complement(const GraphParams& g) const;
  std::size_t size() const { return vertices.size(); }
};

/// Diagonal 0/1 projector onto the subset.
DenseProjector build_pi_A(const VertexSubset& a, const GraphParams& g);
DenseProjector build_pi_A(const SubsystemSpec& s, const GraphParams& g);

/// |A| x |A| principal submatrix of pi_F.
DenseMatrix chopped_correlation(const DenseMatrix& pi_f, const VertexSubset& a);
DenseMatrix chopped_correlation(const FermiSet& f, const SubsystemSpec& s, const GraphParams& g);

/// Ascending eigenvalues. DomainError unless symmetric to 1e-10.
std::vector<double> numeric_spectrum(const DenseMatrix& m);

/// Entropy of a subset straight from pi_F.
double oracle_entropy(const DenseMatrix& pi_f, const VertexSubset& a);

struct CertifyOptions {
  double eigen_tolerance = 1e-8;
  double cluster_gap = 1e-7;
  double entropy_tolerance = 1e-9;
  double trace_tolerance = 1e-10;
  /// Test hook: added to the first closed-form eigenvalue in (0, 1).
  double corrupt_lambda = 0.0;
};

struct CertifyReport {
  int d = 0;
  int q = 0;
  int n = 0;
  int r = 0;
  std::vector<int> fermi;

  bool multiplicity_match = false;
  double max_eigen_deviation = 0.0;
  bool spectrum_match = false;

  double entropy_closed = 0.0;
  double entropy_oracle = 0.0;
  /// |closed - oracle| / max(1, |closed|).
  double entropy_deviation = 0.0;
  bool entropy_match = false;

  double trace_deviation = 0.0;
  bool trace_match = false;

  std::string detail;

  bool pass() const { return spectrum_match && entropy_match && trace_match; }
};

/// Compares the closed-form spectrum and entropy with the oracle's C_A.
CertifyReport certify(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g,
                      const CertifyOptions& options = {});
CertifyReport certify_with_projector(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g,
                                     const DenseMatrix& pi_f, const CertifyOptions& options = {});

struct CertifyInstance {
  GraphParams g;
  SubsystemSpec s;
  FermiSet f;
};

/// Which instances a certification sweep visits.
struct CertifyPlan {
  std::size_t cap = 1024;
  /// d = 1 graphs are enumerated in full only up to this q.
  int d1_full_q_max = 64;
  /// Larger d = 1 graphs, each with n in {1, 2, q/2, q-1, q}.
  std::vector<int> d1_tail_q{128, 256, 512, 1024};
  int random_noncontiguous = 200;
  unsigned seed = 20240611;
};

/// Contiguous F = {0..k0} for every k0, n and r on each graph in the plan,
/// followed by the random non-contiguous sample. Instances on one graph are
/// adjacent.
std::vector<CertifyInstance> plan_instances(const CertifyPlan& plan);

struct SweepSummary {
  std::vector<CertifyReport> reports;
  std::size_t graphs = 0;
  double max_projector_route_gap = 0.0;
  double max_eigen_deviation = 0.0;
  double max_entropy_deviation = 0.0;
  double max_trace_deviation = 0.0;
  std::size_t failures = 0;
};

/// Builds all P_k once per graph (both routes, cross-checked), then certifies
/// the instances on that graph. The parallel version runs instances
/// concurrently; reports keep input order.
SweepSummary certify_sweep(std::span<const CertifyInstance> instances, const CertifyOptions& options = {});
SweepSummary certify_sweep_serial(std::span<const CertifyInstance> instances, const CertifyOptions& options = {});

}  // namespace hamming
