#include "qbench/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qbench/errors.hpp"

namespace qbench {

double exponential_l1_fit(const std::vector<ProbabilityTable>& tables, int n,
                          int bins) {
  if (tables.empty()) throw InputError("exponential_l1_fit: no tables");
  if (bins < 1) throw InputError("exponential_l1_fit: bins must be >= 1");
  for (const auto& t : tables)
    if (t.n_qubits != n)
      throw MismatchError("exponential_l1_fit: table width mismatch");

  std::vector<double> pooled;
  pooled.reserve(tables.size() * tables.front().probs.size());
  for (const auto& t : tables)
    pooled.insert(pooled.end(), t.probs.begin(), t.probs.end());

  const double max_value = *std::max_element(pooled.begin(), pooled.end());
  if (max_value <= 0.0) throw InputError("exponential_l1_fit: all-zero tables");
  const double width = max_value / bins;
  const double total = static_cast<double>(pooled.size());
  const double rate = std::pow(2.0, n);  // N = 2^n

  std::vector<double> empirical(static_cast<std::size_t>(bins), 0.0);
  for (double p : pooled) {
    auto bin = static_cast<std::size_t>(p / width);
    if (bin >= static_cast<std::size_t>(bins))
      bin = static_cast<std::size_t>(bins) - 1;  // p == max lands in last bin
    empirical[bin] += 1.0 / total;
  }

  double acc = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double lo = b * width;
    const double hi = (b + 1) * width;
    const double model = std::exp(-rate * lo) - std::exp(-rate * hi);
    acc += std::abs(empirical[static_cast<std::size_t>(b)] - model);
  }
  return acc;
}

FitCurve layer_convergence(CircuitClass cls, int n,
                           const std::vector<int>& layer_range,
                           int circuits_per_point, std::uint64_t seed) {
  if (cls == CircuitClass::Shallow)
    throw InputError("layer_convergence: shallow class has no layers knob");
  if (circuits_per_point < 1)
    throw InputError("layer_convergence: need >= 1 circuit per point");
  FitCurve curve;
  curve.n_qubits = n;
  for (int layers : layer_range) {
    std::vector<ProbabilityTable> tables;
    tables.reserve(static_cast<std::size_t>(circuits_per_point));
    for (int i = 0; i < circuits_per_point; ++i) {
      const std::uint64_t point_seed = Rng::derive(
          seed, (static_cast<std::uint64_t>(layers) << 32) |
                    static_cast<std::uint64_t>(i));
      Rng rng(point_seed);
      tables.push_back(output_probabilities(generate(cls, n, rng, layers)));
    }
    curve.layer_counts.push_back(layers);
    curve.distances.push_back(exponential_l1_fit(tables, n));
  }
  return curve;
}

namespace {
// inclusive-method quantile: linear interpolation at q * (count - 1)
double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}
}  // namespace

BoxStats box_stats(const std::vector<double>& values) {
  if (values.empty()) throw InputError("box_stats: empty input");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());

  BoxStats s;
  s.count = sorted.size();
  s.q1 = quantile_sorted(sorted, 0.25);
  s.median = quantile_sorted(sorted, 0.50);
  s.q3 = quantile_sorted(sorted, 0.75);
  double sum = 0.0;
  for (double v : sorted) sum += v;
  s.mean = sum / static_cast<double>(sorted.size());

  const double iqr = s.q3 - s.q1;
  const double lo_fence = s.q1 - 1.5 * iqr;
  const double hi_fence = s.q3 + 1.5 * iqr;
  s.whisker_lo = sorted.back();
  s.whisker_hi = sorted.front();
  for (double v : sorted) {
    if (v >= lo_fence) {
      s.whisker_lo = v;
      break;
    }
  }
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    if (*it <= hi_fence) {
      s.whisker_hi = *it;
      break;
    }
  }
  return s;
}

std::optional<int> largest_passing_width(
    const std::map<int, double>& mean_hog_by_n, double threshold) {
  if (mean_hog_by_n.empty())
    throw InputError("largest_passing_width: empty input");
  std::optional<int> best;
  for (const auto& [n, mean] : mean_hog_by_n)
    if (mean >= threshold) best = n;
  return best;
}

Regression correlation_regression(const std::vector<double>& xs,
                                  const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw MismatchError("correlation_regression: length mismatch");
  if (xs.size() < 3)
    throw InputError("correlation_regression: need >= 3 points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 1e-300 || syy <= 1e-300)
    throw InputError("correlation_regression: degenerate variance");
  Regression r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  r.pearson_r = sxy / std::sqrt(sxx * syy);
  return r;
}

}  // namespace qbench
