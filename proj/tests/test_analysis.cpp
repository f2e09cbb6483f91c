#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qbench/analysis.hpp"
#include "qbench/errors.hpp"

using namespace qbench;

namespace {
// synthetic table whose values are draws from the exponential density,
// normalised to sum to one
ProbabilityTable exponential_like(int n, Rng& rng) {
  ProbabilityTable t;
  t.n_qubits = n;
  t.probs.resize(std::size_t{1} << n);
  double total = 0.0;
  for (auto& p : t.probs) {
    p = -std::log(1.0 - rng.uniform()) / std::pow(2.0, n);
    total += p;
  }
  for (auto& p : t.probs) p /= total;
  return t;
}
}  // namespace

TEST_CASE("exponential-like tables fit well, uniform tables do not") {
  Rng rng(3);
  std::vector<ProbabilityTable> good, flat;
  for (int i = 0; i < 100; ++i) good.push_back(exponential_like(5, rng));
  for (int i = 0; i < 100; ++i) flat.push_back(ProbabilityTable::uniform(5));
  CHECK(exponential_l1_fit(good, 5) < 0.1);
  CHECK(exponential_l1_fit(flat, 5) > 1.0);
}

TEST_CASE("fit is invariant under permutations of tables and entries") {
  Rng rng(5);
  std::vector<ProbabilityTable> tables;
  for (int i = 0; i < 10; ++i) tables.push_back(exponential_like(4, rng));
  const double base = exponential_l1_fit(tables, 4);
  std::reverse(tables.begin(), tables.end());
  std::reverse(tables[0].probs.begin(), tables[0].probs.end());
  CHECK(exponential_l1_fit(tables, 4) == doctest::Approx(base));
}

TEST_CASE("fit input validation") {
  CHECK_THROWS_AS(exponential_l1_fit({}, 4), InputError);
  std::vector<ProbabilityTable> wrong{ProbabilityTable::uniform(3)};
  CHECK_THROWS_AS(exponential_l1_fit(wrong, 4), MismatchError);
}

TEST_CASE("square curve converges by n layers") {
  // n = 5: the minimum is approached at layers = n and the curve is flat
  // after; layers = 5 beats layers = 1 by at least 3x (100 circuits)
  std::vector<int> range{1, 2, 5, 10};
  const FitCurve curve = layer_convergence(CircuitClass::Square, 5, range,
                                           100, 77);
  REQUIRE(curve.distances.size() == range.size());
  for (double d : curve.distances) CHECK(d >= 0.0);
  const double at1 = curve.distances[0];
  const double at5 = curve.distances[2];
  const double at10 = curve.distances[3];
  CHECK(at5 * 3.0 <= at1);
  CHECK(at5 < 2.0 * at10 + 0.1);  // flat once converged
}

TEST_CASE("square convergence trend is decreasing (spearman <= -0.5)") {
  for (int n : {3, 4}) {
    std::vector<int> range;
    for (int l = 1; l <= 2 * n; ++l) range.push_back(l);
    const FitCurve curve =
        layer_convergence(CircuitClass::Square, n, range, 30, 99);
    // spearman via rank correlation; layers already sorted ascending
    std::vector<double> ranks(curve.distances.size());
    std::vector<std::size_t> order(curve.distances.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return curve.distances[a] < curve.distances[b];
    });
    for (std::size_t r = 0; r < order.size(); ++r)
      ranks[order[r]] = static_cast<double>(r);
    std::vector<double> xs(ranks.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
    const Regression reg = correlation_regression(xs, ranks);
    CHECK(reg.pearson_r <= -0.5);
  }
}

TEST_CASE("layer_convergence rejects the shallow class") {
  CHECK_THROWS_AS(layer_convergence(CircuitClass::Shallow, 3, {1, 2}, 5, 1),
                  InputError);
}

TEST_CASE("box stats hand example") {
  const BoxStats s = box_stats({1, 2, 3, 4, 5});
  CHECK(s.q1 == doctest::Approx(2.0));
  CHECK(s.median == doctest::Approx(3.0));
  CHECK(s.q3 == doctest::Approx(4.0));
  CHECK(s.mean == doctest::Approx(3.0));
  CHECK(s.whisker_lo == doctest::Approx(1.0));
  CHECK(s.whisker_hi == doctest::Approx(5.0));
}

TEST_CASE("box stats degenerate inputs") {
  const BoxStats c = box_stats({2.5, 2.5, 2.5});
  CHECK(c.q1 == 2.5);
  CHECK(c.q3 == 2.5);
  CHECK(c.whisker_lo == 2.5);
  CHECK(c.whisker_hi == 2.5);
  const BoxStats one = box_stats({7.0});
  CHECK(one.median == 7.0);
  CHECK(one.mean == 7.0);
  CHECK_THROWS_AS(box_stats({}), InputError);
}

TEST_CASE("box stats whiskers clip outliers") {
  const BoxStats s = box_stats({1, 2, 3, 4, 5, 100});
  CHECK(s.whisker_hi < 100.0);
}

TEST_CASE("box stats scale with the data") {
  const std::vector<double> base{0.3, 1.2, 2.7, 3.1, 4.9, 5.5, 9.0};
  std::vector<double> scaled;
  for (double v : base) scaled.push_back(3.0 * v);
  const BoxStats a = box_stats(base);
  const BoxStats b = box_stats(scaled);
  CHECK(b.q1 == doctest::Approx(3.0 * a.q1));
  CHECK(b.median == doctest::Approx(3.0 * a.median));
  CHECK(b.q3 == doctest::Approx(3.0 * a.q3));
  CHECK(b.mean == doctest::Approx(3.0 * a.mean));
  CHECK(b.whisker_lo == doctest::Approx(3.0 * a.whisker_lo));
  CHECK(b.whisker_hi == doctest::Approx(3.0 * a.whisker_hi));
}

TEST_CASE("largest passing width") {
  CHECK(largest_passing_width({{2, 0.84}, {3, 0.7}, {4, 0.6}}) == 3);
  CHECK(largest_passing_width({{2, 0.5}, {3, 0.4}}) == std::nullopt);
  CHECK(largest_passing_width({{2, 0.9}, {5, 0.8}}) == 5);
  CHECK_THROWS_AS(largest_passing_width({}), InputError);
}

TEST_CASE("regression recovers exact lines") {
  const std::vector<double> xs{0, 1, 2, 3, 4};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(2.0 * x + 1.0);
  const Regression r = correlation_regression(xs, ys);
  CHECK(r.pearson_r == doctest::Approx(1.0));
  CHECK(r.slope == doctest::Approx(2.0));
  CHECK(r.intercept == doctest::Approx(1.0));

  std::vector<double> neg;
  for (double x : xs) neg.push_back(-x);
  CHECK(correlation_regression(xs, neg).pearson_r == doctest::Approx(-1.0));
}

TEST_CASE("regression two-point closed form") {
  const Regression r = correlation_regression({1.0, 3.0, 1.0, 3.0},
                                              {2.0, 8.0, 2.0, 8.0});
  CHECK(r.slope == doctest::Approx(3.0));
  CHECK(r.intercept == doctest::Approx(-1.0));
}

TEST_CASE("regression input validation") {
  CHECK_THROWS_AS(correlation_regression({1, 2}, {1, 2}), InputError);
  CHECK_THROWS_AS(correlation_regression({1, 2, 3}, {1, 2}), MismatchError);
  CHECK_THROWS_AS(correlation_regression({1, 1, 1}, {1, 2, 3}), InputError);
}
