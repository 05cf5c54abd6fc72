// Command-line front end: compute, sweep, certify, fit.
//
// Exit codes: 0 success, 1 certification failure, 2 usage or geometry error.

#include "hamming/asymptotics.hpp"
#include "hamming/errors.hpp"
#include "hamming/oracle.hpp"
#include "hamming/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>

namespace {

using namespace hamming;

constexpr int kExitOk = 0;
constexpr int kExitCertifyFailed = 1;
constexpr int kExitUsage = 2;

struct ModelArgs {
  std::string model = "nn";
  std::string measure = "entropy";
  double alpha0 = 0.0;
  double c = 1.0;
  std::vector<double> alphas;
  bool half_filling = false;
  bool bits = false;

  void attach(CLI::App* app) {
    app->add_option("--measure", measure, "entropy, mutual, tripartite, filling or spectrum")->capture_default_str();
    app->add_option("--model", model, "nn, lr or alphas")->capture_default_str();
    app->add_option("--alpha0", alpha0, "chemical potential alpha_0")->capture_default_str();
    app->add_option("--c", c, "decay rate of the lr model")->capture_default_str();
    app->add_option("--alphas", alphas, "explicit alpha_0..alpha_d for --model alphas");
    app->add_flag("--half-filling", half_filling, "use k0 = d/q instead of the model's Fermi momentum");
    app->add_flag("--bits", bits, "report entropies in bits instead of nats");
  }

  SweepConfig config() const {
    SweepConfig cfg;
    cfg.model = parse_model(model);
    cfg.measure = parse_measure(measure);
    cfg.alpha0 = alpha0;
    cfg.c = c;
    cfg.alphas = alphas;
    cfg.half_filling = half_filling;
    cfg.bits = bits;
    return cfg;
  }
};

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int run_compute(const ModelArgs& margs, int d, int q, int n, int r, std::optional<double> delta) {
  SweepConfig cfg = margs.config();
  cfg.d = {d};
  cfg.q = {q};
  cfg.n = {n};
  cfg.r = {r};
  if (delta) cfg.delta = {*delta};
  cfg.validate();
  const auto rows = evaluate_point(cfg, d, q, n, delta ? std::nullopt : std::optional<int>(r), delta);
  for (const auto& row : rows)
    if (!row.error.empty()) return usage_error(row.error);

  nlohmann::json inputs;
  inputs["measure"] = margs.measure;
  inputs["model"] = margs.model;
  inputs["alpha0"] = margs.alpha0;
  inputs["c"] = margs.c;
  inputs["d"] = d;
  inputs["q"] = q;
  inputs["n"] = rows.front().n;
  inputs["r"] = rows.front().r;
  inputs["delta"] = delta ? nlohmann::json(*delta) : nlohmann::json(nullptr);
  inputs["half_filling"] = margs.half_filling;
  inputs["units"] = margs.bits ? "bits" : "nats";

  nlohmann::json record;
  if (cfg.measure == Measure::spectrum) {
    record = nlohmann::json::parse(row_json(rows.front()));
    record["spectrum"] = nlohmann::json::array();
    for (const auto& row : rows) {
      const auto full = nlohmann::json::parse(row_json(row));
      record["spectrum"].push_back({{"Q", full["Q"]},
                                    {"e", full["e"]},
                                    {"lambda", full["lambda"]},
                                    {"multiplicity_log10", full["multiplicity_log10"]}});
    }
    for (const char* key : {"Q", "e", "lambda", "multiplicity_log10", "value"}) record.erase(key);
  } else {
    record = nlohmann::json::parse(row_json(rows.front()));
  }
  record.erase("error");
  record["inputs"] = inputs;
  std::cout << record.dump() << "\n";
  return kExitOk;
}

int run_sweep_cmd(SweepConfig cfg, const std::string& output, const std::string& format) {
  cfg.validate();
  const OutputFormat fmt = parse_format(format);
  const auto rows = run_sweep(cfg);
  std::size_t failed = 0;
  for (const auto& row : rows) failed += row.error.empty() ? 0 : 1;

  std::ofstream file;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) return usage_error("cannot open " + output);
  }
  std::ostream& out = file.is_open() ? file : std::cout;
  if (fmt == OutputFormat::csv)
    write_csv(out, cfg, rows);
  else
    write_json(out, cfg, rows);
  if (!rows.empty() && failed == rows.size()) return usage_error("every grid point failed; first: " + rows.front().error);
  return kExitOk;
}

nlohmann::json report_json(const CertifyReport& rep) {
  return {{"d", rep.d},
          {"q", rep.q},
          {"n", rep.n},
          {"r", rep.r},
          {"fermi", rep.fermi},
          {"pass", rep.pass()},
          {"multiplicity_match", rep.multiplicity_match},
          {"max_eigen_deviation", std::isfinite(rep.max_eigen_deviation) ? nlohmann::json(rep.max_eigen_deviation)
                                                                          : nlohmann::json(nullptr)},
          {"entropy_closed", rep.entropy_closed},
          {"entropy_oracle", rep.entropy_oracle},
          {"entropy_deviation", rep.entropy_deviation},
          {"trace_deviation", rep.trace_deviation},
          {"detail", rep.detail}};
}

int run_certify(CertifyPlan plan, bool corrupt, bool serial, const std::string& report_path) {
  plan.cap = std::min(plan.cap, oracle_cap());
  const auto instances = plan_instances(plan);
  CertifyOptions options;
  if (corrupt) options.corrupt_lambda = 1e-3;
  const SweepSummary summary = serial ? certify_sweep_serial(instances, options) : certify_sweep(instances, options);

  std::cout << "certified " << summary.reports.size() << " instances on " << summary.graphs << " graphs (cap "
            << plan.cap << ")\n"
            << "max projector route gap " << summary.max_projector_route_gap << "\n"
            << "max eigenvalue deviation " << summary.max_eigen_deviation << "\n"
            << "max entropy deviation " << summary.max_entropy_deviation << "\n"
            << "max trace deviation " << summary.max_trace_deviation << "\n";
  std::size_t shown = 0;
  for (const auto& rep : summary.reports)
    if (!rep.pass() && shown++ < 10) std::cout << "FAIL " << rep.detail << "\n";
  std::cout << (summary.failures == 0 ? "PASS" : "FAIL") << " (" << summary.failures << " failures)\n";

  if (!report_path.empty()) {
    nlohmann::json doc;
    doc["meta"] = {{"schema", 1},
                   {"cap", plan.cap},
                   {"d1_full_q_max", plan.d1_full_q_max},
                   {"d1_tail_q", plan.d1_tail_q},
                   {"random_noncontiguous", plan.random_noncontiguous},
                   {"seed", plan.seed},
                   {"corrupt", corrupt}};
    doc["summary"] = {{"instances", summary.reports.size()},
                      {"graphs", summary.graphs},
                      {"failures", summary.failures},
                      {"max_projector_route_gap", summary.max_projector_route_gap},
                      {"max_eigen_deviation", summary.max_eigen_deviation},
                      {"max_entropy_deviation", summary.max_entropy_deviation},
                      {"max_trace_deviation", summary.max_trace_deviation}};
    doc["reports"] = nlohmann::json::array();
    for (const auto& rep : summary.reports) doc["reports"].push_back(report_json(rep));
    std::ofstream file(report_path);
    if (!file) return usage_error("cannot open " + report_path);
    file << doc.dump(2) << "\n";
  }
  return summary.failures == 0 ? kExitOk : kExitCertifyFailed;
}

int run_fit_beta_gamma(const FitGrid& grid) {
  const auto samples = scaling_samples(grid);
  const ScalingFit fit = fit_beta_gamma(samples);
  nlohmann::json out;
  out["regime"] = "beta-gamma";
  out["beta"] = fit.beta;
  out["gamma"] = fit.gamma;
  out["residual"] = fit.residual;
  out["sample_range"] = fit.sample_range;
  out["reference"] = {{"beta", 0.7203}, {"gamma", 0.0278}};
  out["grid"] = {{"r", grid.r}, {"d_over_r", grid.d_over_r}, {"n", grid.n}, {"q", grid.q}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_fit_beta_tilde(const std::vector<double>& deltas, int n, const std::vector<int>& qs,
                       const std::vector<int>& ds, const FitGrid& grid, bool cross) {
  if (deltas.empty() || qs.empty() || ds.empty()) throw DomainError("beta-tilde: empty grid");
  std::optional<ScalingFit> bg;
  if (cross) bg = fit_beta_gamma(scaling_samples(grid));

  nlohmann::json out;
  out["regime"] = "beta-tilde";
  out["n"] = n;
  out["results"] = nlohmann::json::array();
  for (double delta : deltas) {
    const auto samples = delta_samples(delta, n, qs, ds);
    nlohmann::json entry;
    entry["delta"] = delta;
    entry["per_q"] = nlohmann::json::array();
    double sum = 0.0;
    for (int q : qs) {
      std::vector<DeltaSample> series;
      for (const auto& s : samples)
        if (s.q == q) series.push_back(s);
      const BetaTildeEstimate est = fit_beta_tilde(series);
      sum += est.value;
      entry["per_q"].push_back({{"q", q},
                                {"value", est.value},
                                {"d_last", est.d_last},
                                {"drift", std::isfinite(est.drift) ? nlohmann::json(est.drift) : nlohmann::json(nullptr)},
                                {"richardson", std::isfinite(est.richardson) ? nlohmann::json(est.richardson)
                                                                             : nlohmann::json(nullptr)}});
    }
    entry["beta_tilde_over_sqrt_1_minus_delta"] = sum / static_cast<double>(qs.size());
    if (std::abs(delta - 0.2) < 1e-12) entry["reference"] = 0.6988;
    if (std::abs(delta - 0.4) < 1e-12) entry["reference"] = 0.7043;
    if (bg) {
      entry["beta_minus_gamma_one_minus_delta"] = bg->beta - bg->gamma * (1.0 - delta);
      if (std::abs(delta - 0.2) < 1e-12) entry["cross_reference"] = 0.6981;
      if (std::abs(delta - 0.4) < 1e-12) entry["cross_reference"] = 0.7036;
    }
    out["results"].push_back(entry);
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-fermion entanglement on Hamming graphs"};
  app.set_config("--config", "", "read options from an INI/TOML file");
  app.require_subcommand(1);

  // compute
  ModelArgs compute_model;
  int cd = 0, cq = 0, cn = 1, cr = 1;
  std::optional<double> cdelta;
  auto* compute = app.add_subcommand("compute", "evaluate one measure at one point");
  compute_model.attach(compute);
  compute->add_option("--d", cd, "diameter")->required();
  compute->add_option("--q", cq, "alphabet size")->required();
  compute->add_option("--n", cn, "number of blocks")->capture_default_str();
  compute->add_option("--r", cr, "separation")->capture_default_str();
  compute->add_option("--delta", cdelta, "use r = (1 - delta) d");

  // sweep
  ModelArgs sweep_model;
  SweepConfig sweep_cfg;
  std::string sweep_output;
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "evaluate a measure on a parameter grid");
  sweep_model.attach(sweep);
  sweep->add_option("--d", sweep_cfg.d, "diameters")->required()->delimiter(',');
  sweep->add_option("--q", sweep_cfg.q, "alphabet sizes")->required()->delimiter(',');
  sweep->add_option("--n", sweep_cfg.n, "block counts")->delimiter(',')->capture_default_str();
  sweep->add_option("--r", sweep_cfg.r, "separations")->delimiter(',')->capture_default_str();
  sweep->add_option("--delta", sweep_cfg.delta, "use r = (1 - delta) d")->delimiter(',');
  sweep->add_option("--output,-o", sweep_output, "output path (default stdout)");
  sweep->add_option("--format", sweep_format, "csv or json")->capture_default_str();

  // certify
  CertifyPlan plan;
  bool corrupt = false;
  bool serial = false;
  std::string report_path;
  auto* certify = app.add_subcommand("certify", "check closed forms against the brute-force oracle");
  certify->add_option("--cap", plan.cap, "largest q^d to enumerate")->capture_default_str();
  certify->add_option("--d1-full-q", plan.d1_full_q_max, "enumerate d = 1 graphs in full up to this q")
      ->capture_default_str();
  certify->add_option("--d1-tail", plan.d1_tail_q, "larger d = 1 graphs sampled with a few n")->delimiter(',');
  certify->add_option("--random", plan.random_noncontiguous, "random non-contiguous Fermi sets")
      ->capture_default_str();
  certify->add_option("--seed", plan.seed, "seed for the random sample")->capture_default_str();
  certify->add_option("--report", report_path, "write a JSON report here");
  certify->add_flag("--corrupt", corrupt, "test hook: perturb one closed-form eigenvalue by 1e-3");
  certify->add_flag("--serial", serial, "use the serial reference sweep");

  // fit
  std::string regime = "beta-gamma";
  FitGrid grid;
  std::vector<double> fit_delta{0.2, 0.4};
  int fit_n = 2;
  std::vector<int> tilde_q{2, 3, 4};
  std::vector<int> tilde_d{480, 960, 1920, 3840};
  bool cross = false;
  auto* fit = app.add_subcommand("fit", "extract scaling constants from exact samples");
  fit->add_option("--regime", regime, "beta-gamma or beta-tilde")->capture_default_str();
  fit->add_option("--r", grid.r, "beta-gamma: separations")->delimiter(',');
  fit->add_option("--d-over-r", grid.d_over_r, "beta-gamma: d/r ratios")->delimiter(',');
  fit->add_option("--n", grid.n, "beta-gamma: block counts")->delimiter(',');
  fit->add_option("--q", grid.q, "beta-gamma: alphabet sizes")->delimiter(',');
  fit->add_option("--delta", fit_delta, "beta-tilde: delta values")->delimiter(',');
  fit->add_option("--tilde-n", fit_n, "beta-tilde: block count")->capture_default_str();
  fit->add_option("--tilde-q", tilde_q, "beta-tilde: alphabet sizes")->delimiter(',');
  fit->add_option("--tilde-d", tilde_d, "beta-tilde: diameters (multiples of 5 q)")->delimiter(',');
  fit->add_flag("--cross", cross, "beta-tilde: also report beta - gamma (1 - delta) from the default fit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(compute_model, cd, cq, cn, cr, cdelta);
    if (*sweep) {
      SweepConfig cfg = sweep_model.config();
      cfg.d = sweep_cfg.d;
      cfg.q = sweep_cfg.q;
      cfg.n = sweep_cfg.n;
      cfg.r = sweep_cfg.r;
      cfg.delta = sweep_cfg.delta;
      return run_sweep_cmd(cfg, sweep_output, sweep_format);
    }
    if (*certify) return run_certify(plan, corrupt, serial, report_path);
    if (*fit) {
      if (regime == "beta-gamma") return run_fit_beta_gamma(grid);
      if (regime == "beta-tilde") return run_fit_beta_tilde(fit_delta, fit_n, tilde_q, tilde_d, FitGrid{}, cross);
      return usage_error("unknown regime '" + regime + "'");
    }
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return kExitUsage;
}
