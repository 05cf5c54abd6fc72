#include "hamming/sweep.hpp"

#include "hamming/asymptotics.hpp"
#include "hamming/errors.hpp"
#include "hamming/parallel.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace hamming {

namespace {

struct GridPoint {
  int d;
  int q;
  int n;
  std::optional<int> r;
  std::optional<double> delta;
};

std::vector<GridPoint> grid_points(const SweepConfig& c) {
  std::vector<int> ns = c.n;
  if (c.measure == Measure::mutual) ns = {2};
  if (c.measure == Measure::tripartite) ns = {3};
  std::vector<GridPoint> out;
  for (int d : c.d)
    for (int q : c.q) {
      if (c.measure == Measure::filling) {
        out.push_back({d, q, 0, std::nullopt, std::nullopt});
        continue;
      }
      for (int n : ns) {
        if (c.delta.empty()) {
          for (int r : c.r) out.push_back({d, q, n, r, std::nullopt});
        } else {
          for (double delta : c.delta) out.push_back({d, q, n, std::nullopt, delta});
        }
      }
    }
  return out;
}

int resolve_r(int d, std::optional<int> r, std::optional<double> delta) {
  if (r) return *r;
  if (!delta || !(*delta > 0.0 && *delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  const double raw = (1.0 - *delta) * d;
  const long rounded = std::lround(raw);
  if (std::abs(raw - static_cast<double>(rounded)) > 1e-9)
    throw DomainError("(1 - delta) d is not an integer at d = " + std::to_string(d));
  return static_cast<int>(rounded);
}

void fill_measure(SweepRow& row, const EntropyResult& res) {
  row.sign = res.value_log.sign;
  if (!res.value_log.is_zero()) row.log10_value = res.value_log.log10_abs();
  row.value = res.value;
  row.normalizations = res.normalizations;
}

void convert_to_bits(SweepRow& row) {
  const double ln2 = std::numbers::ln2;
  if (row.log10_value) *row.log10_value -= std::log10(ln2);
  if (row.value) *row.value /= ln2;
  for (auto& [name, v] : row.normalizations) v /= ln2;
  if (row.coefficient) *row.coefficient /= ln2;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join_members(const std::vector<int>& members, char sep) {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(members[i]);
  }
  return out;
}

template <class T>
std::string opt_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>)
    return format_double(*v);
  else
    return std::to_string(*v);
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(*v)) return nullptr;
  return *v;
}

nlohmann::json meta_json(const SweepConfig& c) {
  nlohmann::json meta;
  meta["schema"] = 1;
  meta["measure"] = to_string(c.measure);
  meta["model"] = to_string(c.model);
  meta["alpha0"] = c.alpha0;
  meta["c"] = c.c;
  if (c.model == ModelKind::alphas) meta["alphas"] = c.alphas;
  meta["half_filling"] = c.half_filling;
  meta["units"] = c.bits ? "bits" : "nats";
  return meta;
}

nlohmann::json row_object(const SweepRow& row) {
  nlohmann::json j;
  j["d"] = row.d;
  j["q"] = row.q;
  j["n"] = row.n;
  j["r"] = row.r;
  j["delta"] = opt_json(row.delta);
  j["k0"] = opt_json(row.k0);
  j["fermi"] = row.fermi;
  j["measure_sign"] = row.sign;
  j["measure_log10"] = opt_json(row.log10_value);
  j["value"] = opt_json(row.value);
  nlohmann::json norms = nlohmann::json::object();
  for (const auto& name : normalization_columns()) {
    const auto it = row.normalizations.find(name);
    norms[name] = it == row.normalizations.end() ? nlohmann::json(nullptr) : nlohmann::json(it->second);
  }
  j["normalizations"] = norms;
  j["coefficient"] = opt_json(row.coefficient);
  j["Q"] = opt_json(row.Q);
  j["e"] = opt_json(row.e);
  j["lambda"] = opt_json(row.lambda);
  j["multiplicity_log10"] = opt_json(row.multiplicity_log10);
  j["error"] = row.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(row.error);
  return j;
}

}  // namespace

ModelKind parse_model(const std::string& name) {
  if (name == "nn") return ModelKind::nn;
  if (name == "lr") return ModelKind::lr;
  if (name == "alphas" || name == "explicit-alphas") return ModelKind::alphas;
  throw DomainError("unknown model '" + name + "' (expected nn, lr or alphas)");
}

Measure parse_measure(const std::string& name) {
  if (name == "entropy") return Measure::entropy;
  if (name == "mutual") return Measure::mutual;
  if (name == "tripartite") return Measure::tripartite;
  if (name == "filling") return Measure::filling;
  if (name == "spectrum") return Measure::spectrum;
  throw DomainError("unknown measure '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw DomainError("unknown format '" + name + "' (expected csv or json)");
}

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::nn: return "nn";
    case ModelKind::lr: return "lr";
    case ModelKind::alphas: return "alphas";
  }
  return "?";
}

std::string to_string(Measure m) {
  switch (m) {
    case Measure::entropy: return "entropy";
    case Measure::mutual: return "mutual";
    case Measure::tripartite: return "tripartite";
    case Measure::filling: return "filling";
    case Measure::spectrum: return "spectrum";
  }
  return "?";
}

void SweepConfig::validate() const {
  if (d.empty() || q.empty()) throw DomainError("sweep: the d and q grids must be non-empty");
  if (measure != Measure::filling && measure != Measure::mutual && measure != Measure::tripartite && n.empty())
    throw DomainError("sweep: the n grid must be non-empty");
  if (measure != Measure::filling && r.empty() && delta.empty())
    throw DomainError("sweep: give an r grid or a delta grid");
  if (model == ModelKind::lr && !(c > 0)) throw DomainError("lr model needs c > 0");
  if (model == ModelKind::alphas && alphas.size() < 2) throw DomainError("alphas model needs alpha_0..alpha_d");
  for (double x : delta)
    if (!(x > 0.0 && x < 1.0)) throw DomainError("delta must lie in (0, 1)");
}

FermiSet sweep_fermi_set(const SweepConfig& config, const GraphParams& g) {
  if (config.half_filling) {
    if (g.d % g.q != 0) throw DomainError("k0 = d/q needs d to be a multiple of q");
    return FermiSet::contiguous(g.d / g.q, g);
  }
  switch (config.model) {
    case ModelKind::nn: return FermiSet::contiguous(nn_fermi_k0(config.alpha0, g), g);
    case ModelKind::lr: return FermiSet::contiguous(lr_fermi_k0(config.alpha0, config.c, g), g);
    case ModelKind::alphas: return fermi_set(HoppingModel::from_alphas(config.alphas), g);
  }
  throw DomainError("unknown model");
}

std::vector<SweepRow> evaluate_point(const SweepConfig& config, int d, int q, int n, std::optional<int> r_in,
                                     std::optional<double> delta) {
  if (config.measure == Measure::mutual) n = 2;
  if (config.measure == Measure::tripartite) n = 3;
  SweepRow base;
  base.d = d;
  base.q = q;
  base.n = n;
  base.delta = delta;
  try {
    const GraphParams g(d, q);
    const FermiSet f = sweep_fermi_set(config, g);
    base.fermi = f.members;
    if (f.contiguous_k0)
      base.k0 = *f.contiguous_k0;
    else if (f.empty())
      base.k0 = -1;

    if (config.measure == Measure::filling) {
      const double nu = filling_fraction(f, g);
      base.value = nu;
      base.sign = nu > 0 ? 1 : 0;
      if (nu > 0) base.log10_value = std::log10(nu);
      return {base};
    }

    const int r = resolve_r(d, r_in, delta);
    base.r = r;
    const SubsystemSpec s{n, r};
    std::vector<SweepRow> rows;
    switch (config.measure) {
      case Measure::entropy: {
        EntropyResult res = entropy(s, f, g);
        if (delta && !res.value_log.is_zero()) {
          const auto geom = subsystem_geometry(s, g);
          res.normalizations[norm::kDeltaScale] =
              std::exp(res.value_log.ln_mag - geom.volume.ln_mag - 0.5 * std::log1p(-*delta));
        } else if (delta) {
          res.normalizations[norm::kDeltaScale] = 0.0;
        }
        fill_measure(base, res);
        rows.push_back(base);
        break;
      }
      case Measure::mutual: {
        fill_measure(base, mutual_information(r, f, g));
        if (f.contiguous_k0) base.coefficient = g2_coefficient(q, r);
        rows.push_back(base);
        break;
      }
      case Measure::tripartite: {
        fill_measure(base, tripartite_information(r, f, g));
        if (f.contiguous_k0) base.coefficient = g3_coefficient(q, r);
        rows.push_back(base);
        break;
      }
      case Measure::spectrum: {
        for (const auto& entry : chopped_spectrum(s, f, g)) {
          SweepRow row = base;
          row.Q = entry.Q;
          row.e = entry.e;
          row.lambda = entry.lambda.value();
          row.value = entry.lambda.entropy();
          if (sgn(entry.multiplicity) > 0) row.multiplicity_log10 = ln_abs(entry.multiplicity) / std::numbers::ln10;
          rows.push_back(std::move(row));
        }
        break;
      }
      case Measure::filling:
        break;
    }
    if (config.bits)
      for (auto& row : rows) convert_to_bits(row);
    return rows;
  } catch (const std::exception& e) {
    base.error = e.what();
    if (r_in) base.r = *r_in;
    return {base};
  }
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& config) {
  config.validate();
  std::vector<SweepRow> out;
  for (const auto& p : grid_points(config)) {
    auto rows = evaluate_point(config, p.d, p.q, p.n, p.r, p.delta);
    out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  }
  return out;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto points = grid_points(config);
  std::vector<std::vector<SweepRow>> per_point(points.size());
  parallel_for(static_cast<long>(points.size()), [&](long k) {
    const auto& p = points[static_cast<std::size_t>(k)];
    per_point[static_cast<std::size_t>(k)] = evaluate_point(config, p.d, p.q, p.n, p.r, p.delta);
  });
  std::vector<SweepRow> out;
  for (auto& rows : per_point)
    out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  return out;
}

const std::vector<std::string>& normalization_columns() {
  static const std::vector<std::string> cols{norm::kR1Scale, norm::kVolumeScale, norm::kDeltaScale, norm::kInfoScale};
  return cols;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows) {
  out << "# schema=1\n# measure=" << to_string(config.measure) << " model=" << to_string(config.model)
      << " alpha0=" << format_double(config.alpha0) << " c=" << format_double(config.c)
      << " half_filling=" << (config.half_filling ? 1 : 0) << " units=" << (config.bits ? "bits" : "nats") << "\n";
  out << "d,q,n,r,delta,k0,fermi,measure_sign,measure_log10,value";
  for (const auto& name : normalization_columns()) out << "," << csv_escape(name);
  out << ",coefficient,Q,e,lambda,multiplicity_log10,error\n";
  for (const auto& row : rows) {
    out << row.d << "," << row.q << "," << row.n << "," << row.r << "," << opt_field(row.delta) << ","
        << opt_field(row.k0) << "," << join_members(row.fermi, ';') << "," << row.sign << ","
        << opt_field(row.log10_value) << "," << opt_field(row.value);
    for (const auto& name : normalization_columns()) {
      const auto it = row.normalizations.find(name);
      out << "," << (it == row.normalizations.end() ? "" : format_double(it->second));
    }
    out << "," << opt_field(row.coefficient) << "," << opt_field(row.Q) << "," << opt_field(row.e) << ","
        << opt_field(row.lambda) << "," << opt_field(row.multiplicity_log10) << "," << csv_escape(row.error) << "\n";
  }
}

void write_json(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows) {
  nlohmann::json doc;
  doc["meta"] = meta_json(config);
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) doc["rows"].push_back(row_object(row));
  out << doc.dump(2) << "\n";
}

std::string row_json(const SweepRow& row) { return row_object(row).dump(); }

}  // namespace hamming
