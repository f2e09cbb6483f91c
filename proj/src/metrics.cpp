#include "qbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qbench/errors.hpp"

namespace qbench {

namespace {
void require_same_width(const SampleSet& samples, const ProbabilityTable& table) {
  if (samples.n_qubits != table.n_qubits)
    throw MismatchError("sample set and table widths differ");
}

double clamp_floor(int n_qubits) {
  return std::pow(2.0, -static_cast<double>(n_qubits) * n_qubits);
}
}  // namespace

HeavySet heavy_set(const ProbabilityTable& table) {
  std::vector<double> sorted = table.probs;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t dim = sorted.size();
  const double median = (dim % 2 == 0)
                            ? 0.5 * (sorted[dim / 2 - 1] + sorted[dim / 2])
                            : sorted[dim / 2];
  HeavySet h;
  h.median_value = median;
  for (std::size_t x = 0; x < dim; ++x)
    if (table.probs[x] > median) h.members.insert(x);
  return h;
}

double hog_probability(const SampleSet& samples, const ProbabilityTable& table) {
  require_same_width(samples, table);
  const HeavySet h = heavy_set(table);
  std::uint64_t heavy_count = 0;
  for (const auto& [bits, count] : samples.counts)
    if (h.members.count(bits)) heavy_count += count;
  return static_cast<double>(heavy_count) / static_cast<double>(samples.k);
}

double ideal_hog(const ProbabilityTable& table) {
  const HeavySet h = heavy_set(table);
  double acc = 0.0;
  for (std::uint64_t x : h.members) acc += table.probs[x];
  return acc;
}

double cross_entropy(const SampleSet& samples, const ProbabilityTable& table) {
  require_same_width(samples, table);
  const double floor = clamp_floor(table.n_qubits);
  double acc = 0.0;
  for (const auto& [bits, count] : samples.counts) {
    const double p = std::max(table.probs[bits], floor);
    acc += static_cast<double>(count) * std::log(1.0 / p);
  }
  return acc / static_cast<double>(samples.k);
}

double ced(const SampleSet& samples, const ProbabilityTable& table) {
  require_same_width(samples, table);
  const double floor = clamp_floor(table.n_qubits);
  double ce_uniform = 0.0;
  for (double p : table.probs) ce_uniform += std::log(1.0 / std::max(p, floor));
  ce_uniform /= static_cast<double>(table.probs.size());
  return ce_uniform - cross_entropy(samples, table);
}

double l1_distance(const SampleSet& samples, const ProbabilityTable& table) {
  require_same_width(samples, table);
  const double k = static_cast<double>(samples.k);
  double acc = 0.0;
  for (std::size_t x = 0; x < table.probs.size(); ++x) {
    const auto it = samples.counts.find(x);
    const double freq =
        it == samples.counts.end() ? 0.0 : static_cast<double>(it->second) / k;
    acc += std::abs(freq - table.probs[x]);
  }
  return acc;
}

double l1_between(const ProbabilityTable& a, const ProbabilityTable& b) {
  if (a.n_qubits != b.n_qubits) throw MismatchError("table widths differ");
  double acc = 0.0;
  for (std::size_t x = 0; x < a.probs.size(); ++x)
    acc += std::abs(a.probs[x] - b.probs[x]);
  return acc;
}

double normalized_hog(double device_hog, double ideal) {
  if (ideal <= 0.0)
    throw InputError("normalized_hog: ideal heavy-output probability is zero");
  return device_hog / ideal;
}

}  // namespace qbench
