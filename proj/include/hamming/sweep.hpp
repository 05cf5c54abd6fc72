#pragma once

// Grid evaluation behind the command-line tool: one row per grid point in
// lexicographic (d, q, n, r | delta) order, serialized as CSV or JSON.

#include "hamming/measures.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hamming {

enum class ModelKind { nn, lr, alphas };
enum class Measure { entropy, mutual, tripartite, filling, spectrum };
enum class OutputFormat { csv, json };

ModelKind parse_model(const std::string& name);
Measure parse_measure(const std::string& name);
OutputFormat parse_format(const std::string& name);
std::string to_string(ModelKind m);
std::string to_string(Measure m);

struct SweepConfig {
  ModelKind model = ModelKind::nn;
  double alpha0 = 0.0;
  double c = 1.0;
  std::vector<double> alphas;  // explicit alpha_0..alpha_d for ModelKind::alphas
  /// k0 = d/q instead of the model's Fermi momentum; d must be a multiple of q.
  bool half_filling = false;

  std::vector<int> d;
  std::vector<int> q;
  std::vector<int> n{1};
  std::vector<int> r{1};
  /// When non-empty, r = (1 - delta) d replaces the r list.
  std::vector<double> delta;

  Measure measure = Measure::entropy;
  bool bits = false;

  /// Throws DomainError for structural problems (empty grids, bad model
  /// parameters). Per-point geometry errors are reported in rows instead.
  void validate() const;
};

struct SweepRow {
  int d = 0;
  int q = 0;
  int n = 0;
  int r = 0;
  std::optional<double> delta;
  std::optional<int> k0;
  std::vector<int> fermi;
  int sign = 0;
  std::optional<double> log10_value;
  std::optional<double> value;
  std::map<std::string, double> normalizations;
  /// g2 or g3 for information measures on contiguous F.
  std::optional<double> coefficient;
  // Spectrum rows only.
  std::optional<int> Q;
  std::optional<int> e;
  std::optional<double> lambda;
  std::optional<double> multiplicity_log10;
  std::string error;
};

/// Fermi set of the configured model on g (or {0..d/q} under half filling).
FermiSet sweep_fermi_set(const SweepConfig& config, const GraphParams& g);

/// Rows for one grid point; a geometry or domain failure becomes a single
/// row with `error` set.
std::vector<SweepRow> evaluate_point(const SweepConfig& config, int d, int q, int n, std::optional<int> r,
                                     std::optional<double> delta);

/// All rows in grid order. The parallel version evaluates points
/// concurrently and concatenates them in the same order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
std::vector<SweepRow> run_sweep_serial(const SweepConfig& config);

/// Names of the normalization columns, in CSV order.
const std::vector<std::string>& normalization_columns();

void write_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows);
void write_json(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows);
/// One row as a JSON object string (no trailing newline).
std::string row_json(const SweepRow& row);

/// %.17g, which round-trips every double.
std::string format_double(double x);

}  // namespace hamming
