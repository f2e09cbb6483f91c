#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbench/analysis.hpp"
#include "qbench/compile.hpp"
#include "qbench/generators.hpp"
#include "qbench/metrics.hpp"

namespace qbench {

enum class Backend { Ideal, Noisy };

const char* backend_name(Backend b);
Backend backend_from_name(const std::string& name);

struct ExperimentConfig {
  CircuitClass circuit_class = CircuitClass::Square;
  std::vector<int> qubit_range;
  int circuits_per_width = 200;
  std::uint64_t shots = 8192;
  Backend backend = Backend::Ideal;
  std::string device;    // empty: run the uncompiled circuit
  Strategy strategy = Strategy::LineUnaware;
  std::optional<int> layers;
  std::uint64_t experiment_seed = 0;
  std::string out_path;  // JSONL sink; empty: in-memory only
  int jobs = 1;

  void validate() const;
  static ExperimentConfig from_json_file(const std::string& path);
  static ExperimentConfig from_json_text(const std::string& text);
};

/// One circuit's outcome; failed circuits carry status "error" and are
/// excluded from summaries.
struct ResultRow {
  MetricRecord record;
  int index = 0;
  std::string device;
  std::string status = "ok";
  std::string error;

  std::string key() const;  // class/width/index/strategy/backend
  std::string to_json() const;
  static ResultRow from_json(const std::string& line);
};

/// Per-circuit seed: splitmix chain over (experiment seed, class tag,
/// width, circuit index); adding widths never perturbs existing circuits.
std::uint64_t circuit_seed(std::uint64_t experiment_seed, CircuitClass cls,
                           int width, int index);

/// Generate -> compile -> sample -> score one circuit.
ResultRow run_one(const ExperimentConfig& config, int width, int index);

/// Full protocol run.  Streams rows to config.out_path (append; completed
/// row keys found there are not recomputed), writes in deterministic task
/// order, parallelises across circuits with config.jobs workers.  Returns
/// every row of the configured grid.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

std::vector<ResultRow> load_rows(const std::string& path);

/// Group key for summaries: (class, width, strategy, backend).
struct GroupKey {
  std::string circuit_class;
  int n_qubits = 0;
  std::string strategy;
  std::string backend;

  friend bool operator<(const GroupKey& a, const GroupKey& b) {
    return std::tie(a.circuit_class, a.n_qubits, a.strategy, a.backend) <
           std::tie(b.circuit_class, b.n_qubits, b.strategy, b.backend);
  }
};

/// Box statistics per metric for one group of rows.
struct GroupSummary {
  BoxStats hog;
  BoxStats ideal_hog;
  BoxStats ced;
  BoxStats l1;
  BoxStats normalized_hog;
  std::size_t rows = 0;
};

/// Error rows are skipped; throws InputError when nothing summarisable
/// remains.
std::map<GroupKey, GroupSummary> summarize(const std::vector<ResultRow>& rows);

std::string summary_to_csv(const std::map<GroupKey, GroupSummary>& summary);

}  // namespace qbench
