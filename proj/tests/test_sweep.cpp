#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamming/errors.hpp"
#include "hamming/sweep.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

using namespace hamming;

namespace {

SweepConfig base_config() {
  SweepConfig cfg;
  cfg.d = {6, 9, 12};
  cfg.q = {3, 4};
  cfg.n = {1, 2};
  cfg.r = {1, 2};
  return cfg;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("enum parsing") {
  CHECK(parse_model("lr") == ModelKind::lr);
  CHECK(parse_measure("tripartite") == Measure::tripartite);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(to_string(Measure::spectrum) == "spectrum");
  CHECK(to_string(ModelKind::alphas) == "alphas");
  CHECK_THROWS_AS(parse_model("xx"), DomainError);
  CHECK_THROWS_AS(parse_measure(""), DomainError);
}

TEST_CASE("config validation") {
  SweepConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = base_config();
  CHECK_NOTHROW(cfg.validate());
  cfg.model = ModelKind::alphas;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = base_config();
  cfg.model = ModelKind::lr;
  cfg.c = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int t = 0; t < 1000; ++t) {
    const double x = u(rng) * std::pow(10.0, std::uniform_int_distribution(-200, 200)(rng));
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("rows follow grid order and parallel equals serial") {
  const auto cfg = base_config();
  const auto par = run_sweep(cfg);
  const auto ser = run_sweep_serial(cfg);
  REQUIRE(par.size() == 3 * 2 * 2 * 2);
  std::ostringstream a, b;
  write_csv(a, cfg, par);
  write_csv(b, cfg, ser);
  CHECK(a.str() == b.str());
  for (std::size_t i = 1; i < par.size(); ++i) {
    const auto key = [](const SweepRow& r) { return std::tuple(r.d, r.q, r.n, r.r); };
    CHECK(key(par[i - 1]) < key(par[i]));
  }
}

TEST_CASE("CSV schema") {
  const auto cfg = base_config();
  std::ostringstream out;
  write_csv(out, cfg, run_sweep(cfg));
  const auto text = lines(out.str());
  REQUIRE(text.size() == 2 + 1 + 24);
  CHECK(text[0] == "# schema=1");
  CHECK(text[1].rfind("# measure=entropy model=nn", 0) == 0);
  const auto header = split(text[2]);
  CHECK(header.front() == "d");
  CHECK(header.back() == "error");
  const std::size_t columns = header.size();
  for (std::size_t i = 3; i < text.size(); ++i) CHECK(split(text[i]).size() == columns);

  std::size_t value_col = 0, k0_col = 0;
  for (std::size_t c = 0; c < columns; ++c) {
    if (header[c] == "value") value_col = c;
    if (header[c] == "k0") k0_col = c;
  }
  const auto first = split(text[3]);
  CHECK(first[0] == "6");
  CHECK(first[k0_col] == "2");  // nearest-neighbor k0 = floor(d/q)
  CHECK(std::strtod(first[value_col].c_str(), nullptr) > 0.0);
}

TEST_CASE("JSON output") {
  auto cfg = base_config();
  cfg.measure = Measure::mutual;
  std::ostringstream out;
  const auto rows = run_sweep(cfg);
  write_json(out, cfg, rows);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["meta"]["measure"] == "mutual");
  CHECK(doc["meta"]["schema"] == 1);
  REQUIRE(doc["rows"].size() == rows.size());
  for (const auto& row : doc["rows"]) CHECK(row["n"] == 2);
  CHECK(nlohmann::json::parse(row_json(rows.front()))["d"] == rows.front().d);
}

TEST_CASE("error rows") {
  SweepConfig cfg;
  cfg.d = {4};
  cfg.q = {2, 3};
  cfg.n = {3};
  cfg.r = {1, 9};
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[0].error.empty());  // n > q
  CHECK_FALSE(rows[1].error.empty());  // r > d
  CHECK(rows[2].error.empty());
  CHECK_FALSE(rows[3].error.empty());

  cfg.measure = Measure::tripartite;
  cfg.n = {1};
  cfg.r = {1};
  const auto tri = run_sweep(cfg);
  REQUIRE(tri.size() == 2);
  CHECK(tri[0].error.find("q=2") != std::string::npos);
  CHECK(tri[1].error.empty());
}

TEST_CASE("measures and options") {
  SweepConfig cfg;
  cfg.d = {8};
  cfg.q = {2};
  cfg.half_filling = true;
  const auto nats = run_sweep(cfg).front();
  cfg.bits = true;
  const auto bits = run_sweep(cfg).front();
  CHECK(bits.value.value() == doctest::Approx(nats.value.value() / std::log(2.0)).epsilon(1e-14));

  cfg = {};
  cfg.d = {8, 12};
  cfg.q = {4};
  cfg.measure = Measure::filling;
  const auto fill = run_sweep(cfg);
  REQUIRE(fill.size() == 2);
  CHECK(fill[0].value.value() > 0.0);
  CHECK(fill[0].value.value() < 1.0);

  cfg.measure = Measure::spectrum;
  cfg.d = {4};
  cfg.q = {2};
  cfg.n = {2};
  const auto spec = run_sweep(cfg);
  CHECK(spec.size() == 2 * 4);  // (Q, e) for Q = 0..3
  for (const auto& row : spec) {
    CHECK(row.lambda.has_value());
    CHECK(row.Q.has_value());
  }

  cfg = {};
  cfg.d = {50};
  cfg.q = {5};
  cfg.delta = {0.2};
  cfg.half_filling = true;
  const auto delta = run_sweep(cfg);
  REQUIRE(delta.size() == 1);
  CHECK(delta[0].r == 40);
  CHECK(delta[0].normalizations.count("S/(V_A (1-delta)^(1/2))") == 1);

  cfg = {};
  cfg.d = {9};
  cfg.q = {3};
  cfg.measure = Measure::tripartite;
  cfg.half_filling = true;
  const auto i3 = run_sweep(cfg).front();
  CHECK(i3.n == 3);
  CHECK(i3.coefficient.has_value());
}

TEST_CASE("Fermi set per model") {
  const GraphParams g(12, 4);
  SweepConfig cfg;
  CHECK(sweep_fermi_set(cfg, g).contiguous_k0 == 3);
  cfg.model = ModelKind::lr;
  cfg.c = 20.0;
  CHECK(sweep_fermi_set(cfg, g).contiguous_k0 == 3);
  cfg.model = ModelKind::alphas;
  cfg.alphas = std::vector<double>(13, 0.0);
  cfg.alphas[0] = -1.0;
  CHECK(sweep_fermi_set(cfg, g).members.size() == 13);
  cfg.half_filling = true;
  CHECK(sweep_fermi_set(cfg, g).contiguous_k0 == 3);
}
