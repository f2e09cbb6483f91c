#include <cmath>
#include <set>

#include "doctest.h"
#include "qbench/errors.hpp"
#include "qbench/rng.hpp"

using namespace qbench;

TEST_CASE("same seed reproduces the stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 100; ++i)
    if (a.next_u64() == b.next_u64()) ++equal;
  CHECK(equal < 3);
}

TEST_CASE("uniform stays in [0,1) and covers the range") {
  Rng rng(7);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("uniform_int is unbiased over small bounds") {
  Rng rng(3);
  int counts[5] = {0};
  for (int i = 0; i < 50000; ++i) ++counts[rng.uniform_int(5)];
  for (int c : counts) {
    CHECK(c > 9500);
    CHECK(c < 10500);
  }
  CHECK_THROWS_AS(rng.uniform_int(0), InputError);
}

TEST_CASE("bernoulli edge probabilities draw nothing") {
  Rng a(5), b(5);
  CHECK_FALSE(a.bernoulli(0.0));
  CHECK(a.bernoulli(1.0));
  // neither consumed randomness
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("normal pair has roughly standard moments") {
  Rng rng(11);
  double sum = 0.0, sum_sq = 0.0;
  const int k = 40000;
  for (int i = 0; i < k / 2; ++i) {
    const auto [x, y] = rng.normal_pair();
    sum += x + y;
    sum_sq += x * x + y * y;
  }
  CHECK(std::abs(sum / k) < 0.03);
  CHECK(std::abs(sum_sq / k - 1.0) < 0.05);
}

TEST_CASE("derive gives independent-looking streams") {
  const std::uint64_t base = 1234;
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 100; ++i) seeds.insert(Rng::derive(base, i));
  CHECK(seeds.size() == 100);
  CHECK(Rng::derive(base, 7) == Rng::derive(base, 7));
}
