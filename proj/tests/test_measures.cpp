#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamming/errors.hpp"
#include "hamming/measures.hpp"
#include "hamming/oracle.hpp"

#include <cmath>
#include <random>

using namespace hamming;

namespace {

double rel_dev(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Entropy of a spectrum in long double, entry by entry with no log-space tricks.
long double plain_entropy(const std::vector<SpectrumEntry>& spec) {
  long double total = 0;
  for (const auto& e : spec) {
    const long double x = e.lambda.value();
    if (x <= 0 || x >= 1) continue;
    total += e.multiplicity.get_d() * (-x * std::log(x) - (1 - x) * std::log1p(-x));
  }
  return total;
}

struct Instance {
  GraphParams g;
  int r;
  int k0;
};

Instance random_instance(std::mt19937& rng, int d_max, int q_min, int q_max) {
  const GraphParams g(std::uniform_int_distribution(1, d_max)(rng), std::uniform_int_distribution(q_min, q_max)(rng));
  return {g, std::uniform_int_distribution(1, g.d)(rng), std::uniform_int_distribution(-1, g.d)(rng)};
}

}  // namespace

TEST_CASE("entropy examples") {
  const GraphParams g4(4, 2);
  const auto s = entropy_closed_form({1, 1}, 2, g4);
  CHECK(s.value.value() == doctest::Approx(3 * std::log(2.0)).epsilon(1e-14));
  CHECK(oracle_entropy(build_pi_F(FermiSet::contiguous(2, g4), g4).matrix,
                       VertexSubset::from_spec({1, 1}, g4)) == doctest::Approx(3 * std::log(2.0)).epsilon(1e-10));

  // Complementary halves of the q = 2 hypercube carry no entanglement.
  for (int d = 2; d <= 12; ++d)
    for (int k0 = -1; k0 <= d; ++k0) CHECK(entropy_closed_form({2, 1}, k0, GraphParams(d, 2)).value_log.is_zero());

  const std::vector<double> pure{0.0, 1.0, 1.0, 0.0};
  CHECK(entropy_from_eigenvalues(pure) == 0.0);
  CHECK(entropy_from_eigenvalues(std::vector<double>{0.5, 0.5}) == doctest::Approx(2 * std::log(2.0)));
  CHECK_THROWS_AS(entropy_from_eigenvalues(std::vector<double>{1.1}), DomainError);
  CHECK(entropy_from_spectrum({}).value_log.is_zero());
}

TEST_CASE("r = 1 closed form reduces to one binomial term") {
  for (int q = 2; q <= 5; ++q)
    for (int d = 1; d <= 30; ++d)
      for (int n = 1; n <= q; ++n)
        for (int k0 = 0; k0 <= d - 1; ++k0) {
          const GraphParams g(d, q);
          const double expected = binomial_exact(d - 1, d - 1 - k0).get_d() * std::pow(q - 1.0, d - 1 - k0) *
                                  binary_entropy(static_cast<double>(q - n) / q);
          const auto s = entropy_closed_form({n, 1}, k0, g);
          CHECK(rel_dev(s.value.value(), expected) < 1e-13);
          if (n == q) CHECK(s.value_log.is_zero());
        }
}

TEST_CASE("closed form agrees with the spectrum sum") {
  std::mt19937 rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto inst = random_instance(rng, 60, 2, 6);
    const SubsystemSpec s{std::uniform_int_distribution(1, inst.g.q)(rng), inst.r};
    const auto f = FermiSet::contiguous(inst.k0, inst.g);
    const auto closed = entropy_closed_form(s, inst.k0, inst.g).value_log;
    const auto summed = entropy_from_spectrum(chopped_spectrum(s, f, inst.g)).value_log;
    if (closed.is_zero()) {
      CHECK(summed.is_zero());
    } else {
      CHECK(std::abs(std::expm1(closed.ln_mag - summed.ln_mag)) < 1e-12);
    }
  }
}

TEST_CASE("spectrum sum agrees with a plain long double sum") {
  std::mt19937 rng(43);
  for (int t = 0; t < 100; ++t) {
    const auto inst = random_instance(rng, 18, 2, 4);
    const SubsystemSpec s{std::uniform_int_distribution(1, inst.g.q)(rng), inst.r};
    std::vector<int> members;
    for (int k = 0; k <= inst.g.d; ++k)
      if (std::bernoulli_distribution(0.4)(rng)) members.push_back(k);
    const auto f = FermiSet::from_members(members, inst.g);
    const auto spec = chopped_spectrum(s, f, inst.g);
    const double ref = static_cast<double>(plain_entropy(spec));
    const auto got = entropy(s, f, inst.g);
    CHECK(rel_dev(got.value.value_or(0.0), ref) < 1e-12);
  }
}

TEST_CASE("entropy agrees with the dense oracle and its complement") {
  std::mt19937 rng(47);
  for (int t = 0; t < 40; ++t) {
    const GraphParams g(std::uniform_int_distribution(1, 6)(rng), std::uniform_int_distribution(2, 3)(rng));
    const SubsystemSpec s{std::uniform_int_distribution(1, g.q)(rng), std::uniform_int_distribution(1, g.d)(rng)};
    std::vector<int> members;
    for (int k = 0; k <= g.d; ++k)
      if (std::bernoulli_distribution(0.5)(rng)) members.push_back(k);
    const auto f = FermiSet::from_members(members, g);
    const auto pi = build_pi_F(f, g);
    const auto a = VertexSubset::from_spec(s, g);
    const double sa = oracle_entropy(pi.matrix, a);
    const double sb = oracle_entropy(pi.matrix, a.complement(g));
    INFO("d=" << g.d << " q=" << g.q << " n=" << s.n << " r=" << s.r);
    CHECK(std::abs(sa - sb) < 1e-9 * std::max(1.0, sa));
    CHECK(rel_dev(sa, entropy(s, f, g).value.value_or(0.0)) < 1e-9);
  }
}

TEST_CASE("entropy depends on the model only through k0") {
  for (int q = 2; q <= 5; ++q)
    for (int m = 1; m <= 20; ++m) {
      const GraphParams g(q * m, q);
      const auto nn = fermi_set(HoppingModel::nearest_neighbor(0.0, g), g);
      const auto lr = fermi_set(HoppingModel::exponential(0.0, 20.0, g), g);
      REQUIRE(nn.contiguous_k0 == lr.contiguous_k0);
      for (int r : {1, 2, 3})
        if (r <= g.d) {
          const auto a = entropy({1, r}, nn, g).value_log;
          const auto b = entropy({1, r}, lr, g).value_log;
          CHECK(a.sign == b.sign);
          CHECK(a.ln_mag == b.ln_mag);
        }
    }
}

TEST_CASE("mutual information routes") {
  // q = 2, r = 1: the two blocks exhaust the graph, so I2 = 2 S(A1).
  for (int d = 4; d <= 64; d += 4) {
    const GraphParams g(d, 2);
    const int k0 = d / 2;
    const auto i2 = mutual_information(1, k0, g).value_log;
    const auto s1 = entropy_closed_form({1, 1}, k0, g).value_log;
    CHECK(std::abs(std::expm1(i2.ln_mag - s1.ln_mag - std::log(2.0))) < 1e-12);
  }
  std::mt19937 rng(53);
  for (int t = 0; t < 100; ++t) {
    const auto inst = random_instance(rng, 80, 2, 6);
    const auto a = mutual_information(inst.r, inst.k0, inst.g).value_log;
    const auto b = mutual_information_definitional(inst.r, inst.k0, inst.g).value_log;
    CHECK(a.sign >= 0);
    CHECK(a.sign == b.sign);
    if (!a.is_zero()) CHECK(std::abs(std::expm1(a.ln_mag - b.ln_mag)) < 1e-12);
  }
  CHECK(mutual_information(1, -1, GraphParams(5, 3)).value_log.is_zero());
}

TEST_CASE("mutual information is non-negative for arbitrary Fermi sets") {
  std::mt19937 rng(59);
  for (int t = 0; t < 200; ++t) {
    const GraphParams g(std::uniform_int_distribution(1, 30)(rng), std::uniform_int_distribution(2, 5)(rng));
    std::vector<int> members;
    for (int k = 0; k <= g.d; ++k)
      if (std::bernoulli_distribution(0.5)(rng)) members.push_back(k);
    const int r = std::uniform_int_distribution(1, g.d)(rng);
    CHECK(mutual_information(r, FermiSet::from_members(members, g), g).value_log.sign >= 0);
  }
}

TEST_CASE("tripartite information") {
  for (int d = 3; d <= 60; d += 3) {
    const GraphParams g(d, 3);
    const double s1 = entropy_closed_form({1, 1}, d / 3, g).value.value();
    const auto i3 = tripartite_information(1, d / 3, g);
    CHECK(std::abs(i3.value.value_or(0.0)) <= 1e-12 * s1);
  }
  CHECK_THROWS_AS(tripartite_information(1, 2, GraphParams(4, 2)), UnsupportedGeometry);
  CHECK(tripartite_information(2, -1, GraphParams(6, 4)).value_log.is_zero());

  std::mt19937 rng(61);
  for (int t = 0; t < 100; ++t) {
    const auto inst = random_instance(rng, 60, 3, 6);
    const auto a = tripartite_information(inst.r, inst.k0, inst.g).value_log;
    const auto b = tripartite_information_definitional(inst.r, inst.k0, inst.g).value_log;
    const auto c = tripartite_information_via_mutual(inst.r, inst.k0, inst.g).value_log;
    INFO("d=" << inst.g.d << " q=" << inst.g.q << " r=" << inst.r << " k0=" << inst.k0);
    CHECK(a.sign == b.sign);
    CHECK(a.sign == c.sign);
    if (!a.is_zero()) {
      CHECK(std::abs(std::expm1(a.ln_mag - b.ln_mag)) < 1e-12);
      CHECK(std::abs(std::expm1(a.ln_mag - c.ln_mag)) < 1e-12);
    }
  }
}

TEST_CASE("information measures on the dense oracle") {
  // I2 and I3 from oracle entropies of block unions.
  for (int q : {3, 4})
    for (int d = 1; std::pow(q, d) <= 256; ++d)
      for (int r = 1; r <= d; ++r)
        for (int k0 = 0; k0 <= d; ++k0) {
          const GraphParams g(d, q);
          const auto pi = build_pi_F(FermiSet::contiguous(k0, g), g).matrix;
          double s[4] = {0, 0, 0, 0};
          for (int n = 1; n <= 3; ++n) s[n] = oracle_entropy(pi, VertexSubset::from_spec({n, r}, g));
          const double i2 = 2 * s[1] - s[2];
          const double i3 = 3 * s[1] - 3 * s[2] + s[3];
          CHECK(std::abs(mutual_information(r, k0, g).value.value_or(0.0) - i2) < 1e-9 * std::max(1.0, s[1]));
          CHECK(std::abs(tripartite_information(r, k0, g).value.value_or(0.0) - i3) < 1e-9 * std::max(1.0, s[1]));
        }
}

TEST_CASE("normalizations are consistent with the value") {
  const GraphParams g(40, 4);
  const auto s = entropy_closed_form({2, 3}, 10, g);
  const double v = s.value.value();
  const double r1 = std::pow(4.0, 39) / std::sqrt(40.0);
  const double vol = 2 * std::pow(4.0, 37) * std::sqrt(3.0 / 40);
  CHECK(s.normalizations.at(norm::kR1Scale) == doctest::Approx(v / r1).epsilon(1e-12));
  CHECK(s.normalizations.at(norm::kVolumeScale) == doctest::Approx(v / vol).epsilon(1e-12));
  const auto i2 = mutual_information(3, 10, g);
  CHECK(i2.normalizations.at(norm::kInfoScale) ==
        doctest::Approx(i2.value.value() / (std::pow(4.0, 37) / std::sqrt(40.0))).epsilon(1e-12));
}

TEST_CASE("huge entropies stay finite in log space") {
  const GraphParams g(4000, 5);
  const auto s = entropy_closed_form({3, 50}, 800, g);
  CHECK(s.value_log.sign == 1);
  CHECK(std::isfinite(s.value_log.ln_mag));
  CHECK_FALSE(s.value.has_value());
  const auto dev = proportionality_deviation({3, 50}, 800, g);
  CHECK(dev.ln_mag < s.value_log.ln_mag);
}
