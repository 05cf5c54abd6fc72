#include "hamming/oracle.hpp"

#include "hamming/errors.hpp"
#include "hamming/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

namespace hamming {

namespace {

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const DenseMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Letter i (0-based, most significant first) of binary string b over d letters.
int bit_of(unsigned long b, int i, int d) { return static_cast<int>((b >> (d - 1 - i)) & 1UL); }

DenseMatrix binary_string_term(unsigned long b, const GraphParams& g) {
  const auto q = static_cast<Eigen::Index>(g.q);
  const DenseMatrix uniform = DenseMatrix::Constant(q, q, 1.0 / g.q);
  const DenseMatrix rest = DenseMatrix::Identity(q, q) - uniform;
  DenseMatrix out = DenseMatrix::Ones(1, 1);
  for (int i = 0; i < g.d; ++i) out = kron(out, bit_of(b, i, g.d) == 0 ? uniform : rest);
  return out;
}

DenseMatrix weight_projector(int k, const GraphParams& g, std::size_t dim) {
  if (!g.valid_mode(k)) throw DomainError("weight projector: k outside [0, d]");
  const auto n = static_cast<Eigen::Index>(dim);
  DenseMatrix acc = DenseMatrix::Zero(n, n);
  const unsigned long strings = 1UL << g.d;
  for (unsigned long b = 0; b < strings; ++b) {
    if (std::popcount(b) != g.d - k) continue;
    acc += binary_string_term(b, g);
  }
  return acc;
}

struct SymmetricEigen {
  Eigen::VectorXd values;
  DenseMatrix vectors;  // empty unless requested
};

// The tridiagonal QR step can exhaust its iteration budget on matrices with
// massive exact degeneracy. A permutation similarity changes the reduced
// tridiagonal form without changing the spectrum, so retry under a few fixed
// relabelings before giving up.
SymmetricEigen solve_symmetric(const DenseMatrix& m, bool want_vectors) {
  const int options = want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  {
    const Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m, options);
    if (solver.info() == Eigen::Success)
      return {solver.eigenvalues(), want_vectors ? DenseMatrix(solver.eigenvectors()) : DenseMatrix()};
  }
  for (unsigned seed = 1; seed <= 4; ++seed) {
    Eigen::PermutationMatrix<Eigen::Dynamic> perm(m.rows());
    perm.setIdentity();
    std::mt19937 rng(seed);
    std::shuffle(perm.indices().data(), perm.indices().data() + perm.indices().size(), rng);
    const DenseMatrix relabeled = perm * m * perm.transpose();
    const Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(relabeled, options);
    if (solver.info() == Eigen::Success)
      return {solver.eigenvalues(),
              want_vectors ? DenseMatrix(perm.transpose() * solver.eigenvectors()) : DenseMatrix()};
  }
  throw ConsistencyError("symmetric eigensolver did not converge");
}

// Calls sink(k, P_k) for every k, P_k built from numeric eigenvectors of A.
void for_each_spectral_projector(const GraphParams& g, const std::function<void(int, const DenseMatrix&)>& sink) {
  const DenseMatrix a = build_adjacency(g);
  const SymmetricEigen eig = solve_symmetric(a, true);
  const auto& values = eig.values;
  const auto& vectors = eig.vectors;

  std::vector<std::vector<Eigen::Index>> groups(static_cast<std::size_t>(g.d) + 1);
  for (Eigen::Index c = 0; c < values.size(); ++c) {
    const long k = std::lround((values(c) + g.d) / g.q);
    if (k < 0 || k > g.d || std::abs(values(c) - adjacency_eigenvalue(static_cast<int>(k), g)) > 1e-9)
      throw ConsistencyError("adjacency eigenvalue " + std::to_string(values(c)) + " matches no omega_k");
    groups[static_cast<std::size_t>(k)].push_back(c);
  }
  for (int k = 0; k <= g.d; ++k) {
    const auto& cols = groups[static_cast<std::size_t>(k)];
    if (BigInt(static_cast<unsigned long>(cols.size())) != adjacency_degeneracy(k, g))
      throw ConsistencyError("adjacency eigenspace " + std::to_string(k) + " has the wrong dimension");
    DenseMatrix basis(vectors.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = vectors.col(cols[c]);
    sink(k, basis * basis.transpose());
  }
}

double spectral_route_gap(const GraphParams& g, std::span<const DenseMatrix> binary_by_k) {
  double gap = 0.0;
  for_each_spectral_projector(g, [&](int k, const DenseMatrix& p) {
    gap = std::max(gap, max_abs(p - binary_by_k[static_cast<std::size_t>(k)]));
  });
  return gap;
}

std::vector<int> all_modes(const GraphParams& g) {
  std::vector<int> ks(static_cast<std::size_t>(g.d) + 1);
  for (int k = 0; k <= g.d; ++k) ks[static_cast<std::size_t>(k)] = k;
  return ks;
}

std::string describe(const CertifyReport& r) {
  std::ostringstream out;
  out << "H(" << r.d << "," << r.q << ") n=" << r.n << " r=" << r.r << " F={";
  for (std::size_t i = 0; i < r.fermi.size(); ++i) out << (i ? "," : "") << r.fermi[i];
  out << "}";
  return out.str();
}

CertifyReport failed_report(const CertifyInstance& inst, const std::string& why) {
  CertifyReport rep;
  rep.d = inst.g.d;
  rep.q = inst.g.q;
  rep.n = inst.s.n;
  rep.r = inst.s.r;
  rep.fermi = inst.f.members;
  rep.detail = why;
  return rep;
}

// Distinct closed-form eigenvalues with summed multiplicities, ascending.
struct ClosedValue {
  double value;
  long count;
};

std::vector<ClosedValue> closed_values(const std::vector<SpectrumEntry>& spectrum, double corrupt) {
  std::vector<std::pair<const UnitFraction*, long>> items;
  for (const auto& e : spectrum)
    if (sgn(e.multiplicity) > 0) items.emplace_back(&e.lambda, e.multiplicity.get_si());
  std::ranges::sort(items, [](const auto& a, const auto& b) {
    return a.first->numerator * b.first->denominator < b.first->numerator * a.first->denominator;
  });
  std::vector<ClosedValue> out;
  const UnitFraction* prev = nullptr;
  for (const auto& [lambda, count] : items) {
    if (prev != nullptr && *prev == *lambda) {
      out.back().count += count;
    } else {
      out.push_back({lambda->value(), count});
      prev = lambda;
    }
  }
  if (corrupt != 0.0) {
    for (auto& v : out)
      if (v.value > 0.0 && v.value < 1.0) {
        v.value += corrupt;
        break;
      }
  }
  return out;
}

}  // namespace

std::size_t oracle_cap() {
  if (const char* env = std::getenv("HAMMING_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultOracleCap;
}

std::size_t oracle_dimension(const GraphParams& g, std::size_t cap) {
  std::size_t dim = 1;
  for (int i = 0; i < g.d; ++i) {
    if (dim > cap / static_cast<std::size_t>(g.q))
      throw CapacityError("oracle: q^d exceeds the size cap " + std::to_string(cap));
    dim *= static_cast<std::size_t>(g.q);
  }
  return dim;
}

ProjectorCheck check_projector(const DenseMatrix& p) {
  ProjectorCheck out;
  out.symmetry = max_abs(p - p.transpose());
  const DenseMatrix sym = 0.5 * (p + p.transpose());
  const DenseMatrix defect = sym * sym - sym;
  const SymmetricEigen d_eig = solve_symmetric(0.5 * (defect + defect.transpose()), false);
  out.idempotence = d_eig.values.size() ? d_eig.values.cwiseAbs().maxCoeff() : 0.0;
  for (double x : numeric_spectrum(sym)) out.spectrum = std::max(out.spectrum, std::min(std::abs(x), std::abs(x - 1)));
  return out;
}

DenseMatrix build_adjacency_kronecker(const GraphParams& g) {
  const auto dim = static_cast<Eigen::Index>(oracle_dimension(g));
  const auto q = static_cast<Eigen::Index>(g.q);
  const DenseMatrix hop = DenseMatrix::Ones(q, q) - DenseMatrix::Identity(q, q);
  DenseMatrix a = DenseMatrix::Zero(dim, dim);
  for (int i = 0; i < g.d; ++i) {
    DenseMatrix term = DenseMatrix::Ones(1, 1);
    for (int j = 0; j < g.d; ++j) term = kron(term, j == i ? hop : DenseMatrix::Identity(q, q));
    a += term;
  }
  return a;
}

DenseMatrix build_adjacency_distance(const GraphParams& g) {
  const auto dim = oracle_dimension(g);
  const auto q = static_cast<std::size_t>(g.q);
  DenseMatrix a = DenseMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t v = 0; v < dim; ++v)
    for (std::size_t w = 0; w < dim; ++w) {
      int distance = 0;
      for (std::size_t x = v, y = w; x > 0 || y > 0; x /= q, y /= q) distance += (x % q) != (y % q);
      if (distance == 1) a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w)) = 1.0;
    }
  return a;
}

DenseMatrix build_adjacency(const GraphParams& g) {
  DenseMatrix a = build_adjacency_kronecker(g);
  if (a != build_adjacency_distance(g)) throw ConsistencyError("adjacency: Kronecker and distance routes differ");
  return a;
}

std::vector<DenseMatrix> weight_projectors_serial(const GraphParams& g, const std::vector<int>& ks) {
  const auto dim = oracle_dimension(g);
  std::vector<DenseMatrix> out;
  out.reserve(ks.size());
  for (int k : ks) out.push_back(weight_projector(k, g, dim));
  return out;
}

std::vector<DenseMatrix> weight_projectors(const GraphParams& g, const std::vector<int>& ks) {
  const auto dim = oracle_dimension(g);
  std::vector<DenseMatrix> out(ks.size());
  parallel_for(static_cast<long>(ks.size()), [&](long i) {
    out[static_cast<std::size_t>(i)] = weight_projector(ks[static_cast<std::size_t>(i)], g, dim);
  });
  return out;
}

std::vector<DenseMatrix> weight_projectors_spectral(const GraphParams& g) {
  std::vector<DenseMatrix> out(static_cast<std::size_t>(g.d) + 1);
  for_each_spectral_projector(g, [&](int k, const DenseMatrix& p) { out[static_cast<std::size_t>(k)] = p; });
  return out;
}

double weight_projector_gap(std::span<const DenseMatrix> binary, std::span<const DenseMatrix> spectral) {
  if (binary.size() != spectral.size()) throw DomainError("weight_projector_gap: length mismatch");
  double gap = 0.0;
  for (std::size_t k = 0; k < binary.size(); ++k) gap = std::max(gap, max_abs(binary[k] - spectral[k]));
  return gap;
}

DenseMatrix fermi_projector(const FermiSet& f, std::span<const DenseMatrix> by_k) {
  if (by_k.empty()) throw DomainError("fermi_projector: no weight projectors");
  DenseMatrix out = DenseMatrix::Zero(by_k.front().rows(), by_k.front().cols());
  for (int k : f.members) {
    if (k < 0 || static_cast<std::size_t>(k) >= by_k.size()) throw DomainError("fermi_projector: mode out of range");
    out += by_k[static_cast<std::size_t>(k)];
  }
  return out;
}

DenseProjector build_pi_F(const FermiSet& f, const GraphParams& g) {
  const auto dim = static_cast<Eigen::Index>(oracle_dimension(g));
  const auto binary = weight_projectors(g, f.members);
  DenseMatrix pi = DenseMatrix::Zero(dim, dim);
  for (const auto& p : binary) pi += p;

  double gap = 0.0;
  for_each_spectral_projector(g, [&](int k, const DenseMatrix& p) {
    const auto it = std::ranges::find(f.members, k);
    if (it == f.members.end()) return;
    gap = std::max(gap, max_abs(p - binary[static_cast<std::size_t>(it - f.members.begin())]));
  });
  if (gap > kProjectorRouteTolerance)
    throw ConsistencyError("pi_F: binary-string and spectral routes differ by " + std::to_string(gap));
  return {std::move(pi), g};
}

VertexSubset VertexSubset::from_indices(std::vector<std::size_t> indices, const GraphParams& g) {
  const auto dim = oracle_dimension(g);
  std::ranges::sort(indices);
  if (std::ranges::adjacent_find(indices) != indices.end()) throw DomainError("VertexSubset: duplicate vertex");
  if (!indices.empty() && indices.back() >= dim) throw DomainError("VertexSubset: vertex index out of range");
  return VertexSubset{std::move(indices)};
}

VertexSubset VertexSubset::from_spec(const SubsystemSpec& s, const GraphParams& g) {
  s.validate(g);
  oracle_dimension(g);
  std::size_t block = 1;
  for (int i = 0; i < s.block_diameter(g); ++i) block *= static_cast<std::size_t>(g.q);
  // Index offset of a vertex whose first r letters all equal 1.
  std::size_t stride = 0;
  std::size_t place = block;
  for (int i = 0; i < s.r; ++i, place *= static_cast<std::size_t>(g.q)) stride += place;

  VertexSubset out;
  out.vertices.reserve(static_cast<std::size_t>(s.n) * block);
  for (int j = 0; j < s.n; ++j)
    for (std::size_t u = 0; u < block; ++u) out.vertices.push_back(static_cast<std::size_t>(j) * stride + u);
  return out;
}

VertexSubset VertexSubset::complement(const GraphParams& g) const {
  const auto dim = oracle_dimension(g);
  VertexSubset out;
  std::size_t next = 0;
  for (std::size_t v = 0; v < dim; ++v) {
    if (next < vertices.size() && vertices[next] == v) {
      ++next;
      continue;
    }
    out.vertices.push_back(v);
  }
  return out;
}

DenseProjector build_pi_A(const VertexSubset& a, const GraphParams& g) {
  const auto dim = static_cast<Eigen::Index>(oracle_dimension(g));
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (std::size_t v : a.vertices) m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) = 1.0;
  return {std::move(m), g};
}

DenseProjector build_pi_A(const SubsystemSpec& s, const GraphParams& g) {
  return build_pi_A(VertexSubset::from_spec(s, g), g);
}

DenseMatrix chopped_correlation(const DenseMatrix& pi_f, const VertexSubset& a) {
  const auto m = static_cast<Eigen::Index>(a.size());
  DenseMatrix out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out(i, j) = pi_f(static_cast<Eigen::Index>(a.vertices[static_cast<std::size_t>(i)]),
                       static_cast<Eigen::Index>(a.vertices[static_cast<std::size_t>(j)]));
  return out;
}

DenseMatrix chopped_correlation(const FermiSet& f, const SubsystemSpec& s, const GraphParams& g) {
  return chopped_correlation(build_pi_F(f, g).matrix, VertexSubset::from_spec(s, g));
}

std::vector<double> numeric_spectrum(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("numeric_spectrum: matrix is not square");
  if (max_abs(m - m.transpose()) > 1e-10) throw DomainError("numeric_spectrum: matrix is not symmetric");
  if (m.size() == 0) return {};
  const SymmetricEigen eig = solve_symmetric(m, false);
  std::vector<double> out(eig.values.data(), eig.values.data() + eig.values.size());
  std::ranges::sort(out);
  return out;
}

double oracle_entropy(const DenseMatrix& pi_f, const VertexSubset& a) {
  return entropy_from_eigenvalues(numeric_spectrum(chopped_correlation(pi_f, a)), 1e-8);
}

CertifyReport certify_with_projector(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g,
                                     const DenseMatrix& pi_f, const CertifyOptions& options) {
  CertifyReport rep;
  rep.d = g.d;
  rep.q = g.q;
  rep.n = s.n;
  rep.r = s.r;
  rep.fermi = f.members;

  const VertexSubset a = VertexSubset::from_spec(s, g);
  const DenseMatrix c = chopped_correlation(pi_f, a);
  const std::vector<double> numeric = numeric_spectrum(c);

  const auto spectrum = chopped_spectrum(s, f, g);
  const auto closed = closed_values(spectrum, options.corrupt_lambda);

  // Cluster the numeric eigenvalues and compare counts with the closed form.
  std::vector<long> cluster_sizes;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    if (i == 0 || numeric[i] - numeric[i - 1] > options.cluster_gap)
      cluster_sizes.push_back(1);
    else
      ++cluster_sizes.back();
  }
  rep.multiplicity_match = cluster_sizes.size() == closed.size();
  for (std::size_t i = 0; rep.multiplicity_match && i < closed.size(); ++i)
    rep.multiplicity_match = cluster_sizes[i] == closed[i].count;

  // Elementwise distance between the sorted lists.
  std::vector<double> expanded;
  expanded.reserve(numeric.size());
  for (const auto& v : closed) expanded.insert(expanded.end(), static_cast<std::size_t>(v.count), v.value);
  if (expanded.size() == numeric.size()) {
    for (std::size_t i = 0; i < numeric.size(); ++i)
      rep.max_eigen_deviation = std::max(rep.max_eigen_deviation, std::abs(numeric[i] - expanded[i]));
  } else {
    rep.max_eigen_deviation = std::numeric_limits<double>::infinity();
  }
  rep.spectrum_match = rep.multiplicity_match && rep.max_eigen_deviation < options.eigen_tolerance;

  const EntropyResult closed_entropy = entropy(s, f, g);
  rep.entropy_closed = closed_entropy.value.value_or(std::numeric_limits<double>::infinity());
  rep.entropy_oracle = entropy_from_eigenvalues(numeric, options.eigen_tolerance);
  rep.entropy_deviation =
      std::abs(rep.entropy_closed - rep.entropy_oracle) / std::max(1.0, std::abs(rep.entropy_closed));
  rep.entropy_match = rep.entropy_deviation <= options.entropy_tolerance;

  Rational trace = 0;
  for (const auto& e : spectrum) trace += Rational(e.multiplicity) * Rational(e.lambda.numerator, e.lambda.denominator);
  const double closed_trace = trace.get_d();
  rep.trace_deviation = std::abs(c.trace() - closed_trace) / std::max(1.0, std::abs(closed_trace));
  rep.trace_match = rep.trace_deviation <= options.trace_tolerance;

  if (!rep.pass()) {
    std::ostringstream why;
    why << describe(rep) << ":";
    if (!rep.multiplicity_match) why << " multiplicities differ;";
    if (!rep.spectrum_match) why << " eigenvalue deviation " << rep.max_eigen_deviation << ";";
    if (!rep.entropy_match) why << " entropy deviation " << rep.entropy_deviation << ";";
    if (!rep.trace_match) why << " trace deviation " << rep.trace_deviation << ";";
    rep.detail = why.str();
  }
  return rep;
}

CertifyReport certify(const SubsystemSpec& s, const FermiSet& f, const GraphParams& g,
                      const CertifyOptions& options) {
  return certify_with_projector(s, f, g, build_pi_F(f, g).matrix, options);
}

std::vector<CertifyInstance> plan_instances(const CertifyPlan& plan) {
  std::vector<GraphParams> graphs;
  for (int d = 1; (1UL << d) <= plan.cap; ++d) {
    for (int q = 2;; ++q) {
      std::size_t size = 1;
      bool fits = true;
      for (int i = 0; i < d && fits; ++i) {
        size *= static_cast<std::size_t>(q);
        fits = size <= plan.cap;
      }
      if (!fits) break;
      if (d == 1 && q > plan.d1_full_q_max && std::ranges::find(plan.d1_tail_q, q) == plan.d1_tail_q.end()) continue;
      graphs.emplace_back(d, q);
    }
  }

  std::vector<CertifyInstance> out;
  for (const auto& g : graphs) {
    std::vector<int> ns;
    if (g.d == 1 && g.q > plan.d1_full_q_max) {
      ns = {1, 2, g.q / 2, g.q - 1, g.q};
      std::ranges::sort(ns);
      ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    } else {
      for (int n = 1; n <= g.q; ++n) ns.push_back(n);
    }
    for (int n : ns)
      for (int r = 1; r <= g.d; ++r)
        for (int k0 = 0; k0 <= g.d; ++k0) out.push_back({g, {n, r}, FermiSet::contiguous(k0, g)});
  }

  std::vector<GraphParams> rich;
  for (const auto& g : graphs)
    if (g.d >= 2) rich.push_back(g);
  if (!rich.empty() && plan.random_noncontiguous > 0) {
    std::mt19937 rng(plan.seed);
    for (int made = 0; made < plan.random_noncontiguous;) {
      const GraphParams g = rich[std::uniform_int_distribution<std::size_t>(0, rich.size() - 1)(rng)];
      std::vector<int> members;
      for (int k = 0; k <= g.d; ++k)
        if (std::bernoulli_distribution(0.5)(rng)) members.push_back(k);
      FermiSet f = FermiSet::from_members(members, g);
      if (f.empty() || f.contiguous_k0) continue;
      const int n = std::uniform_int_distribution<int>(1, g.q)(rng);
      const int r = std::uniform_int_distribution<int>(1, g.d)(rng);
      out.push_back({g, {n, r}, std::move(f)});
      ++made;
    }
  }
  std::ranges::stable_sort(out, [](const CertifyInstance& a, const CertifyInstance& b) {
    return std::pair(a.g.d, a.g.q) < std::pair(b.g.d, b.g.q);
  });
  return out;
}

namespace {

template <bool Parallel>
SweepSummary run_sweep(std::span<const CertifyInstance> instances, const CertifyOptions& options) {
  SweepSummary summary;
  summary.reports.resize(instances.size());
  std::size_t begin = 0;
  while (begin < instances.size()) {
    const GraphParams g = instances[begin].g;
    std::size_t end = begin;
    while (end < instances.size() && instances[end].g == g) ++end;
    ++summary.graphs;

    std::vector<DenseMatrix> by_k;
    std::string graph_failure;
    try {
      by_k = Parallel ? weight_projectors(g, all_modes(g)) : weight_projectors_serial(g, all_modes(g));
      const double gap = spectral_route_gap(g, by_k);
      summary.max_projector_route_gap = std::max(summary.max_projector_route_gap, gap);
      if (gap > kProjectorRouteTolerance)
        graph_failure = "pi_F routes differ by " + std::to_string(gap);
    } catch (const std::exception& e) {
      graph_failure = e.what();
    }

    const auto run_one = [&](std::size_t i) {
      const CertifyInstance& inst = instances[i];
      if (!graph_failure.empty()) {
        summary.reports[i] = failed_report(inst, graph_failure);
        return;
      }
      try {
        summary.reports[i] = certify_with_projector(inst.s, inst.f, inst.g, fermi_projector(inst.f, by_k), options);
      } catch (const std::exception& e) {
        summary.reports[i] = failed_report(inst, e.what());
      }
    };
    if constexpr (Parallel) {
      parallel_for(static_cast<long>(end - begin), [&](long k) { run_one(begin + static_cast<std::size_t>(k)); });
    } else {
      for (std::size_t i = begin; i < end; ++i) run_one(i);
    }
    begin = end;
  }

  for (const auto& rep : summary.reports) {
    summary.max_eigen_deviation = std::max(summary.max_eigen_deviation, rep.max_eigen_deviation);
    summary.max_entropy_deviation = std::max(summary.max_entropy_deviation, rep.entropy_deviation);
    summary.max_trace_deviation = std::max(summary.max_trace_deviation, rep.trace_deviation);
    if (!rep.pass()) ++summary.failures;
  }
  return summary;
}

}  // namespace

SweepSummary certify_sweep(std::span<const CertifyInstance> instances, const CertifyOptions& options) {
  return run_sweep<true>(instances, options);
}

SweepSummary certify_sweep_serial(std::span<const CertifyInstance> instances, const CertifyOptions& options) {
  return run_sweep<false>(instances, options);
}

}  // namespace hamming
