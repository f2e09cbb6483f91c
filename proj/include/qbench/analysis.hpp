#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qbench/generators.hpp"
#include "qbench/statevector.hpp"

namespace qbench {

/// Box-and-whisker summary: quartiles by linear interpolation of order
/// statistics (inclusive method), whiskers at the furthest data point
/// within 1.5 * IQR of the quartiles.
struct BoxStats {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  double mean = 0.0;
  std::size_t count = 0;
};

/// Layer-convergence curve: l1 fit distance per layer count.
struct FitCurve {
  int n_qubits = 0;
  std::vector<int> layer_counts;
  std::vector<double> distances;
};

/// l1 distance between the pooled distribution of output probabilities and
/// the exponential density N*exp(-N*x), N = 2^n: histogram the pooled
/// values into `bins` equal-width bins over [0, max], compare bin masses
/// against the model's integral per bin.
double exponential_l1_fit(const std::vector<ProbabilityTable>& tables, int n,
                          int bins = 50);

/// For each layer count: generate `circuits_per_point` circuits, compute
/// ideal tables, return exponential_l1_fit.  Class must support a layers
/// parameter (square or deep).
FitCurve layer_convergence(CircuitClass cls, int n,
                           const std::vector<int>& layer_range,
                           int circuits_per_point, std::uint64_t seed);

BoxStats box_stats(const std::vector<double>& values);

/// Largest n whose mean HOG is >= threshold; nullopt when none pass.
std::optional<int> largest_passing_width(
    const std::map<int, double>& mean_hog_by_n, double threshold = 2.0 / 3.0);

struct Regression {
  double pearson_r = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares line and Pearson correlation; lengths must match and be
/// >= 3 with non-degenerate variance.
Regression correlation_regression(const std::vector<double>& xs,
                                  const std::vector<double>& ys);

}  // namespace qbench
