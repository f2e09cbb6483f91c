#pragma once

#include <cstdint>
#include <utility>

namespace qbench {

/// splitmix64 single step; used for seeding and seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic random stream (xoshiro256**).  The same seed produces the
/// same sequence on every platform; no standard-library distributions are
/// used anywhere so streams are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform double in [0, 2*pi).
  double uniform_angle();

  /// Uniform integer in [0, bound); bound >= 1.
  std::uint64_t uniform_int(std::uint64_t bound);

  bool bernoulli(double p);

  /// Pair of independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair();

  /// Derive an independent stream seed from a base seed and a stream tag.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t s_[4];
};

}  // namespace qbench
