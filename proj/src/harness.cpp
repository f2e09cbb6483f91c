#include "qbench/harness.hpp"

#include <atomic>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qbench/errors.hpp"
#include "qbench/sampling.hpp"
#include "qbench/statevector.hpp"

namespace qbench {

const char* backend_name(Backend b) {
  return b == Backend::Ideal ? "ideal" : "noisy";
}

Backend backend_from_name(const std::string& name) {
  if (name == "ideal") return Backend::Ideal;
  if (name == "noisy") return Backend::Noisy;
  throw InputError("unknown backend: " + name);
}

void ExperimentConfig::validate() const {
  if (qubit_range.empty()) throw InputError("config: empty qubit range");
  for (int n : qubit_range)
    if (n < 2) throw InputError("config: qubit widths must be >= 2");
  if (circuits_per_width < 1)
    throw InputError("config: circuits_per_width must be >= 1");
  if (shots < 1) throw InputError("config: shots must be >= 1");
  if (backend == Backend::Noisy && device.empty())
    throw InputError("config: noisy backend needs a device");
  if (jobs < 1) throw InputError("config: jobs must be >= 1");
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig c;
  c.circuit_class = class_from_name(j.at("class").get<std::string>());
  c.qubit_range = j.at("qubits").get<std::vector<int>>();
  c.circuits_per_width = j.value("circuits_per_width", 200);
  c.shots = j.value("shots", std::uint64_t{8192});
  c.backend = backend_from_name(j.value("backend", "ideal"));
  c.device = j.value("device", "");
  c.strategy = strategy_from_name(j.value("strategy", "line_unaware"));
  if (j.contains("layers") && !j.at("layers").is_null())
    c.layers = j.at("layers").get<int>();
  c.experiment_seed = j.value("seed", std::uint64_t{0});
  c.out_path = j.value("out", "");
  c.jobs = j.value("jobs", 1);
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string ResultRow::key() const {
  std::ostringstream out;
  out << record.circuit_class << "/" << record.n_qubits << "/" << index << "/"
      << record.strategy << "/" << record.backend;
  return out.str();
}

std::string ResultRow::to_json() const {
  nlohmann::json j;
  j["id"] = record.circuit_id;
  j["class"] = record.circuit_class;
  j["n"] = record.n_qubits;
  j["index"] = index;
  j["strategy"] = record.strategy;
  j["backend"] = record.backend;
  j["device"] = device;
  j["seed"] = record.seed;
  j["shots"] = record.shots;
  j["status"] = status;
  if (status == "ok") {
    j["hog"] = record.hog;
    j["ideal_hog"] = record.ideal_hog;
    j["ced"] = record.ced;
    j["l1"] = record.l1;
  } else {
    j["error"] = error;
  }
  return j.dump();
}

ResultRow ResultRow::from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("bad result row: ") + e.what());
  }
  ResultRow r;
  r.record.circuit_id = j.value("id", "");
  r.record.circuit_class = j.at("class").get<std::string>();
  r.record.n_qubits = j.at("n").get<int>();
  r.index = j.at("index").get<int>();
  r.record.strategy = j.at("strategy").get<std::string>();
  r.record.backend = j.at("backend").get<std::string>();
  r.device = j.value("device", "");
  r.record.seed = j.value("seed", std::uint64_t{0});
  r.record.shots = j.value("shots", std::uint64_t{0});
  r.status = j.value("status", "ok");
  if (r.status == "ok") {
    r.record.hog = j.at("hog").get<double>();
    r.record.ideal_hog = j.at("ideal_hog").get<double>();
    r.record.ced = j.at("ced").get<double>();
    r.record.l1 = j.at("l1").get<double>();
  } else {
    r.error = j.value("error", "");
  }
  return r;
}

std::uint64_t circuit_seed(std::uint64_t experiment_seed, CircuitClass cls,
                           int width, int index) {
  std::uint64_t s = experiment_seed;
  s = Rng::derive(s, static_cast<std::uint64_t>(cls) + 1);
  s = Rng::derive(s, static_cast<std::uint64_t>(width));
  s = Rng::derive(s, static_cast<std::uint64_t>(index));
  return s;
}

namespace {

// virtual-frame sample extraction from a restricted compiled circuit
SampleSet extract_virtual(const SampleSet& physical, int n_virtual,
                          const std::vector<int>& out_pos) {
  const int m = physical.n_qubits;
  SampleSet out;
  out.n_qubits = n_virtual;
  for (const auto& [bits, count] : physical.counts) {
    std::uint64_t v = 0;
    for (int vq = 0; vq < n_virtual; ++vq) {
      const int pos = out_pos[static_cast<std::size_t>(vq)];
      if (bits >> (m - 1 - pos) & 1)
        v |= std::uint64_t{1} << (n_virtual - 1 - vq);
    }
    out.insert(v, count);
  }
  return out;
}

NoiseModel restrict_noise(const NoiseModel& full,
                          const std::vector<int>& used) {
  NoiseModel out;
  for (int p : used) {
    out.single_qubit.push_back(full.single_qubit[static_cast<std::size_t>(p)]);
    out.readout.push_back(full.readout[static_cast<std::size_t>(p)]);
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (i == j) continue;
      const double rate = full.two_qubit_rate(used[i], used[j]);
      if (rate > 0.0)
        out.two_qubit[{static_cast<int>(i), static_cast<int>(j)}] = rate;
    }
  }
  return out;
}

}  // namespace

ResultRow run_one(const ExperimentConfig& config, int width, int index) {
  ResultRow row;
  row.index = index;
  row.device = config.device;
  row.record.circuit_class = class_name(config.circuit_class);
  row.record.n_qubits = width;
  row.record.strategy =
      config.device.empty() ? "none" : strategy_name(config.strategy);
  row.record.backend = backend_name(config.backend);
  row.record.shots = config.shots;
  const std::uint64_t seed =
      circuit_seed(config.experiment_seed, config.circuit_class, width, index);
  row.record.seed = seed;
  {
    std::ostringstream id;
    id << row.record.circuit_class << "/n" << width << "/i" << index;
    row.record.circuit_id = id.str();
  }

  try {
    Rng gen_rng(Rng::derive(seed, 0));
    const Circuit circuit =
        generate(config.circuit_class, width, gen_rng, config.layers);

    // ideal reference table always comes from the uncompiled circuit
    const ProbabilityTable table = output_probabilities(circuit);

    Rng sample_rng(Rng::derive(seed, 1));
    SampleSet samples;
    if (config.device.empty()) {
      if (config.backend == Backend::Noisy)
        throw InputError("noisy backend needs a device");
      samples = sample_ideal(table, config.shots, sample_rng);
    } else {
      const DeviceModel dev = resolve_device(config.device);
      const CompileResult compiled = compile(circuit, dev, config.strategy);
      const RestrictedCircuit restricted =
          restrict_to_used(compiled.circuit, compiled.final_map);
      std::vector<int> out_pos(static_cast<std::size_t>(width));
      for (int vq = 0; vq < width; ++vq)
        out_pos[static_cast<std::size_t>(vq)] =
            restricted.compact_index(compiled.final_map.physical(vq));

      SampleSet physical;
      if (config.backend == Backend::Ideal) {
        physical = sample_ideal(output_probabilities(restricted.circuit),
                                config.shots, sample_rng);
      } else {
        physical = sample_noisy(restricted.circuit,
                                restrict_noise(dev.noise_model(),
                                               restricted.used),
                                config.shots, sample_rng);
      }
      samples = extract_virtual(physical, width, out_pos);
    }

    row.record.hog = hog_probability(samples, table);
    row.record.ideal_hog = ideal_hog(table);
    row.record.ced = ced(samples, table);
    row.record.l1 = l1_distance(samples, table);
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
  }
  return row;
}

std::vector<ResultRow> load_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open rows file: " + path);
  std::vector<ResultRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(ResultRow::from_json(line));
  }
  return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  config.validate();

  struct Task {
    int width;
    int index;
  };
  std::vector<Task> grid;
  for (int width : config.qubit_range)
    for (int i = 0; i < config.circuits_per_width; ++i)
      grid.push_back({width, i});

  // resume: completed keys in the sink are kept as-is
  std::map<std::string, ResultRow> done;
  if (!config.out_path.empty()) {
    std::ifstream probe(config.out_path);
    if (probe.good()) {
      for (const auto& row : load_rows(config.out_path)) done[row.key()] = row;
    }
  }

  std::vector<std::optional<ResultRow>> slots(grid.size());
  std::vector<bool> precomputed(grid.size(), false);
  {
    // fill resumed slots up front
    ResultRow probe;
    for (std::size_t t = 0; t < grid.size(); ++t) {
      probe.record.circuit_class = class_name(config.circuit_class);
      probe.record.n_qubits = grid[t].width;
      probe.index = grid[t].index;
      probe.record.strategy =
          config.device.empty() ? "none" : strategy_name(config.strategy);
      probe.record.backend = backend_name(config.backend);
      const auto it = done.find(probe.key());
      if (it != done.end()) {
        slots[t] = it->second;
        precomputed[t] = true;
      }
    }
  }

  std::mutex mtx;
  std::condition_variable cv;
  std::atomic<std::size_t> next_task{0};
  const int workers = std::min<int>(config.jobs,
                                     static_cast<int>(grid.size()) > 0
                                         ? static_cast<int>(grid.size())
                                         : 1);

  auto work = [&] {
    for (;;) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= grid.size()) return;
      if (precomputed[t]) continue;
      ResultRow row = run_one(config, grid[t].width, grid[t].index);
      {
        std::lock_guard<std::mutex> lock(mtx);
        slots[t] = std::move(row);
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);

  // single writer, deterministic task order
  std::ofstream sink;
  if (!config.out_path.empty())
    sink.open(config.out_path, std::ios::app);
  for (std::size_t t = 0; t < grid.size(); ++t) {
    std::unique_lock<std::mutex> lock(mtx);
    cv.wait(lock, [&] { return slots[t].has_value(); });
    if (sink.is_open() && !precomputed[t]) {
      sink << slots[t]->to_json() << "\n";
      sink.flush();
    }
  }
  for (auto& th : pool) th.join();

  std::vector<ResultRow> rows;
  rows.reserve(grid.size());
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

std::map<GroupKey, GroupSummary> summarize(const std::vector<ResultRow>& rows) {
  std::map<GroupKey, std::vector<const ResultRow*>> groups;
  for (const auto& row : rows) {
    if (row.status != "ok") continue;
    groups[GroupKey{row.record.circuit_class, row.record.n_qubits,
                    row.record.strategy, row.record.backend}]
        .push_back(&row);
  }
  if (groups.empty()) throw InputError("summarize: no successful rows");

  std::map<GroupKey, GroupSummary> out;
  for (const auto& [key, members] : groups) {
    std::vector<double> hog, ihog, ced_v, l1_v, nhog;
    for (const ResultRow* r : members) {
      hog.push_back(r->record.hog);
      ihog.push_back(r->record.ideal_hog);
      ced_v.push_back(r->record.ced);
      l1_v.push_back(r->record.l1);
      if (r->record.ideal_hog > 0.0)
        nhog.push_back(r->record.hog / r->record.ideal_hog);
    }
    GroupSummary s;
    s.rows = members.size();
    s.hog = box_stats(hog);
    s.ideal_hog = box_stats(ihog);
    s.ced = box_stats(ced_v);
    s.l1 = box_stats(l1_v);
    s.normalized_hog = nhog.empty() ? BoxStats{} : box_stats(nhog);
    out[key] = s;
  }
  return out;
}

std::string summary_to_csv(const std::map<GroupKey, GroupSummary>& summary) {
  std::ostringstream out;
  out << "class,n_qubits,strategy,backend,metric,count,mean,q1,median,q3,"
         "whisker_lo,whisker_hi\n";
  auto line = [&out](const GroupKey& key, const char* metric,
                     const BoxStats& s) {
    out << key.circuit_class << "," << key.n_qubits << "," << key.strategy
        << "," << key.backend << "," << metric << "," << s.count << ","
        << s.mean << "," << s.q1 << "," << s.median << "," << s.q3 << ","
        << s.whisker_lo << "," << s.whisker_hi << "\n";
  };
  for (const auto& [key, s] : summary) {
    line(key, "hog", s.hog);
    line(key, "ideal_hog", s.ideal_hog);
    line(key, "ced", s.ced);
    line(key, "l1", s.l1);
    line(key, "normalized_hog", s.normalized_hog);
  }
  return out.str();
}

}  // namespace qbench
