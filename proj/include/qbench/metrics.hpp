#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "qbench/sampling.hpp"
#include "qbench/statevector.hpp"

namespace qbench {

/// Bitstrings whose ideal probability strictly exceeds the median of all
/// 2^n probabilities.
struct HeavySet {
  std::set<std::uint64_t> members;
  double median_value = 0.0;
};

/// Per-circuit benchmark result row.
struct MetricRecord {
  std::string circuit_id;
  std::string circuit_class;
  int n_qubits = 0;
  std::string strategy;
  std::string backend;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  double hog = 0.0;
  double ideal_hog = 0.0;
  double ced = 0.0;
  double l1 = 0.0;
};

/// Median over all 2^n values (even count: mean of the two central order
/// statistics); membership by strict inequality.
HeavySet heavy_set(const ProbabilityTable& table);

/// Fraction of samples that land in the heavy set of the table.
double hog_probability(const SampleSet& samples, const ProbabilityTable& table);

/// Total ideal probability of the heavy set.
double ideal_hog(const ProbabilityTable& table);

/// (1/k) sum_i ln(1 / max{p(x_i), 2^{-n^2}});  natural logarithm.
double cross_entropy(const SampleSet& samples, const ProbabilityTable& table);

/// CE(uniform, p) - CE(samples, p); 1 for samples drawn from p itself,
/// 0 for uniform samples, in expectation.
double ced(const SampleSet& samples, const ProbabilityTable& table);

/// sum_x |s^x/k - p(x)| over all 2^n bitstrings.
double l1_distance(const SampleSet& samples, const ProbabilityTable& table);

/// sum_x |a(x) - b(x)|.
double l1_between(const ProbabilityTable& a, const ProbabilityTable& b);

/// device_hog / ideal; InputError when ideal == 0.
double normalized_hog(double device_hog, double ideal);

}  // namespace qbench
