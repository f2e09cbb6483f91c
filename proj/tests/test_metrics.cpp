#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qbench/errors.hpp"
#include "qbench/metrics.hpp"
#include "qbench/rng.hpp"

using namespace qbench;

namespace {
ProbabilityTable table_of(int n, std::vector<double> probs) {
  ProbabilityTable t;
  t.n_qubits = n;
  t.probs = std::move(probs);
  return t;
}

ProbabilityTable random_table(int n, Rng& rng) {
  ProbabilityTable t;
  t.n_qubits = n;
  t.probs.resize(std::size_t{1} << n);
  double total = 0.0;
  for (auto& p : t.probs) {
    p = -std::log(1.0 - rng.uniform());
    total += p;
  }
  for (auto& p : t.probs) p /= total;
  return t;
}
}  // namespace

TEST_CASE("uniform table has an empty heavy set") {
  const auto h = heavy_set(ProbabilityTable::uniform(2));
  CHECK(h.median_value == 0.25);
  CHECK(h.members.empty());
}

TEST_CASE("heavy set by hand enumeration") {
  const auto h = heavy_set(table_of(2, {0.5, 0.25, 0.125, 0.125}));
  CHECK(h.median_value == doctest::Approx(0.1875));
  CHECK(h.members == std::set<std::uint64_t>{0, 1});
  const auto h1 = heavy_set(table_of(1, {1.0, 0.0}));
  CHECK(h1.median_value == doctest::Approx(0.5));
  CHECK(h1.members == std::set<std::uint64_t>{0});
}

TEST_CASE("hog of all-heavy samples is one") {
  const auto t = table_of(2, {0.5, 0.25, 0.125, 0.125});
  SampleSet s;
  s.n_qubits = 2;
  s.insert(0, 70);
  s.insert(1, 30);
  CHECK(hog_probability(s, t) == 1.0);
}

TEST_CASE("ideal hog examples") {
  CHECK(ideal_hog(ProbabilityTable::uniform(3)) == 0.0);
  CHECK(ideal_hog(table_of(2, {0.5, 0.25, 0.125, 0.125})) ==
        doctest::Approx(0.75));
}

TEST_CASE("hog of exact expected counts equals ideal hog within 1/k") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_table(3, rng);
    SampleSet s;
    s.n_qubits = 3;
    const std::uint64_t k = 1 << 20;
    for (std::size_t x = 0; x < t.probs.size(); ++x) {
      const auto c = static_cast<std::uint64_t>(
          std::llround(t.probs[x] * static_cast<double>(k)));
      if (c > 0) s.insert(x, c);
    }
    CHECK(std::abs(hog_probability(s, t) - ideal_hog(t)) <
          16.0 / static_cast<double>(k));
  }
}

TEST_CASE("cross entropy of a point mass on itself is zero") {
  const auto t = ProbabilityTable::point_mass(2, 3);
  SampleSet s;
  s.n_qubits = 2;
  s.insert(3, 10);
  CHECK(cross_entropy(s, t) == doctest::Approx(0.0));
}

TEST_CASE("cross entropy against the uniform table is n ln 2") {
  const auto t = ProbabilityTable::uniform(3);
  SampleSet s;
  s.n_qubits = 3;
  s.insert(1, 5);
  s.insert(6, 10);
  CHECK(cross_entropy(s, t) == doctest::Approx(std::log(8.0)));
}

TEST_CASE("clamp kicks in on zero-probability outcomes") {
  const auto t = ProbabilityTable::point_mass(2, 0);
  SampleSet s;
  s.n_qubits = 2;
  s.insert(3, 1);  // p = 0 -> clamp to 2^{-4}
  CHECK(cross_entropy(s, t) == doctest::Approx(4.0 * std::log(2.0)));
}

TEST_CASE("ced identity: ced + ce == ce(uniform, p) exactly") {
  Rng rng(7);
  const auto t = random_table(3, rng);
  Rng srng(8);
  const SampleSet s = sample_ideal(t, 2048, srng);
  const double floor = std::pow(2.0, -9.0);
  double ce_u = 0.0;
  for (double p : t.probs) ce_u += std::log(1.0 / std::max(p, floor));
  ce_u /= static_cast<double>(t.probs.size());
  CHECK(ced(s, t) + cross_entropy(s, t) == doctest::Approx(ce_u).epsilon(1e-12));
}

TEST_CASE("l1 examples") {
  const auto uniform = ProbabilityTable::uniform(2);
  SampleSet s;
  s.n_qubits = 2;
  s.insert(0, 10);
  CHECK(l1_distance(s, uniform) == doctest::Approx(1.5));

  SampleSet exact;
  exact.n_qubits = 2;
  for (std::uint64_t x = 0; x < 4; ++x) exact.insert(x, 25);
  CHECK(l1_distance(exact, uniform) == doctest::Approx(0.0));
}

TEST_CASE("l1 between tables is a metric") {
  CHECK(l1_between(ProbabilityTable::point_mass(1, 0),
                   ProbabilityTable::uniform(1)) == doctest::Approx(1.0));
  CHECK(l1_between(ProbabilityTable::point_mass(2, 0),
                   ProbabilityTable::point_mass(2, 3)) == doctest::Approx(2.0));
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_table(3, rng);
    const auto b = random_table(3, rng);
    const auto c = random_table(3, rng);
    CHECK(l1_between(a, b) == doctest::Approx(l1_between(b, a)));
    CHECK(l1_between(a, a) < 1e-12);
    CHECK(l1_between(a, c) <= l1_between(a, b) + l1_between(b, c) + 1e-12);
  }
}

TEST_CASE("normalized hog") {
  CHECK(normalized_hog(0.846574, 0.846574) == doctest::Approx(1.0));
  CHECK(normalized_hog(0.5, 0.846574) == doctest::Approx(0.59062256));
  CHECK(normalized_hog(0.0, 0.7) == 0.0);
  CHECK_THROWS_AS(normalized_hog(0.5, 0.0), InputError);
}

TEST_CASE("width mismatch errors") {
  SampleSet s;
  s.n_qubits = 2;
  s.insert(0, 1);
  const auto t = ProbabilityTable::uniform(3);
  CHECK_THROWS_AS(hog_probability(s, t), MismatchError);
  CHECK_THROWS_AS(cross_entropy(s, t), MismatchError);
  CHECK_THROWS_AS(ced(s, t), MismatchError);
  CHECK_THROWS_AS(l1_distance(s, t), MismatchError);
  CHECK_THROWS_AS(l1_between(ProbabilityTable::uniform(2), t), MismatchError);
}

TEST_CASE("streaming metrics match brute-force enumeration") {
  // independent oracle: expand the sample multiset, recompute everything
  // by direct loops over outcomes
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(3));
    const auto t = random_table(n, rng);
    Rng srng(rng.next_u64());
    const SampleSet s = sample_ideal(t, 512, srng);

    std::vector<std::uint64_t> flat;
    for (const auto& [bits, count] : s.counts)
      for (std::uint64_t i = 0; i < count; ++i) flat.push_back(bits);

    // median by full sort, descending heaviness by strict comparison
    std::vector<double> sorted = t.probs;
    std::sort(sorted.begin(), sorted.end());
    const double median =
        0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
    double hog_oracle = 0.0;
    for (std::uint64_t x : flat)
      if (t.probs[x] > median) hog_oracle += 1.0;
    hog_oracle /= static_cast<double>(flat.size());

    const double floor = std::pow(2.0, -static_cast<double>(n) * n);
    double ce_oracle = 0.0;
    for (std::uint64_t x : flat)
      ce_oracle += std::log(1.0 / std::max(t.probs[x], floor));
    ce_oracle /= static_cast<double>(flat.size());
    double ceu_oracle = 0.0;
    for (double p : t.probs) ceu_oracle += std::log(1.0 / std::max(p, floor));
    ceu_oracle /= static_cast<double>(t.probs.size());

    double l1_oracle = 0.0;
    for (std::size_t x = 0; x < t.probs.size(); ++x) {
      double freq = 0.0;
      for (std::uint64_t y : flat)
        if (y == x) freq += 1.0;
      freq /= static_cast<double>(flat.size());
      l1_oracle += std::abs(freq - t.probs[x]);
    }

    CHECK(std::abs(hog_probability(s, t) - hog_oracle) < 1e-12);
    CHECK(std::abs(cross_entropy(s, t) - ce_oracle) < 1e-12);
    CHECK(std::abs(ced(s, t) - (ceu_oracle - ce_oracle)) < 1e-12);
    CHECK(std::abs(l1_distance(s, t) - l1_oracle) < 1e-12);
  }
}
