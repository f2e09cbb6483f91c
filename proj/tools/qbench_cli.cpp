#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "qbench/harness.hpp"
#include "qbench/plots.hpp"
#include "qbench/qasm.hpp"
#include "qbench/rebase.hpp"

namespace fs = std::filesystem;
using namespace qbench;

namespace {

int cmd_generate(const std::string& cls_name, const std::vector<int>& widths,
                 int count, std::uint64_t seed, const std::string& out_dir) {
  const CircuitClass cls = class_from_name(cls_name);
  fs::create_directories(out_dir);
  for (int n : widths) {
    for (int i = 0; i < count; ++i) {
      Rng rng(Rng::derive(circuit_seed(seed, cls, n, i), 0));
      Circuit circuit = generate(cls, n, rng);
      if (gate_count(circuit, GateKind::SU4) > 0) circuit = rebase(circuit);
      std::ostringstream name;
      name << cls_name << "_n" << n << "_" << std::setw(3)
           << std::setfill('0') << i << ".qasm";
      std::ofstream out(fs::path(out_dir) / name.str());
      out << export_qasm(circuit);
    }
  }
  std::cout << "wrote " << widths.size() * static_cast<std::size_t>(count)
            << " qasm files to " << out_dir << "\n";
  return 0;
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            const std::string& out_override, int jobs_override) {
  ExperimentConfig config = ExperimentConfig::from_json_file(config_path);
  if (seed) config.experiment_seed = *seed;
  if (!out_override.empty()) config.out_path = out_override;
  if (jobs_override > 0) config.jobs = jobs_override;
  const auto rows = run_experiment(config);
  std::size_t failures = 0;
  for (const auto& row : rows)
    if (row.status != "ok") ++failures;
  std::cout << rows.size() << " rows (" << failures << " failed)";
  if (!config.out_path.empty()) std::cout << " -> " << config.out_path;
  std::cout << "\n";
  return failures == 0 ? 0 : 2;
}

int cmd_summarize(const std::string& rows_path, const std::string& out_path) {
  const auto rows = load_rows(rows_path);
  const auto summary = summarize(rows);
  const std::string csv = summary_to_csv(summary);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    out << csv;
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_plot(const std::string& rows_path, const std::string& kind_name,
             const std::string& out_prefix, bool svg) {
  const auto rows = load_rows(rows_path);
  const PlotKind kind = plot_kind_from_name(kind_name);
  PlotOutput result;
  if (kind == PlotKind::Box) {
    result = emit_box_plot(summarize(rows), out_prefix, svg);
  } else if (kind == PlotKind::Scatter) {
    result = emit_scatter_plot(rows, out_prefix, svg);
  } else {
    std::cerr << "convergence plots come from `qbench fit` output\n";
    return 1;
  }
  for (const auto& f : result.files) std::cout << "wrote " << f << "\n";
  return 0;
}

int cmd_fit(const std::string& cls_name, const std::vector<int>& widths,
            int layer_lo, int layer_hi, int circuits, std::uint64_t seed,
            const std::string& out_prefix, bool svg) {
  const CircuitClass cls = class_from_name(cls_name);
  std::vector<int> layer_range;
  for (int l = layer_lo; l <= layer_hi; ++l) layer_range.push_back(l);
  std::vector<FitCurve> curves;
  for (int n : widths) {
    curves.push_back(layer_convergence(cls, n, layer_range, circuits,
                                       Rng::derive(seed, n)));
    const auto& c = curves.back();
    std::cout << cls_name << " n=" << n << ":";
    for (std::size_t i = 0; i < c.layer_counts.size(); ++i)
      std::cout << " " << c.layer_counts[i] << ":" << std::setprecision(4)
                << c.distances[i];
    std::cout << "\n";
  }
  const auto result = emit_convergence_plot(curves, out_prefix, svg);
  for (const auto& f : result.files) std::cout << "wrote " << f << "\n";
  return 0;
}

int cmd_devices(const std::string& validate_path) {
  const auto print_props = [](const DeviceModel& dev) {
    const GraphProperties p = graph_properties(dev.coupling);
    std::cout << dev.name << ": vertices=" << p.vertices
              << " avg_degree=" << std::setprecision(6) << p.average_degree
              << " radius=" << p.radius << " min_cycle=";
    if (p.min_cycle_length) std::cout << *p.min_cycle_length;
    else std::cout << "n/a";
    std::cout << "\n";
  };
  if (!validate_path.empty()) {
    print_props(resolve_device(validate_path));
    return 0;
  }
  for (const auto& name : bundled_device_names()) {
    try {
      print_props(resolve_device(name));
    } catch (const std::exception& e) {
      std::cerr << name << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum benchmarking suite: circuit generation, compilation, "
               "simulation and scoring"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Emit a QASM circuit corpus");
  std::string gen_class = "square";
  std::vector<int> gen_widths{2, 3, 4, 5};
  int gen_count = 20;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "qasm_out";
  gen->add_option("--class", gen_class, "shallow | square | deep");
  gen->add_option("--qubits", gen_widths, "widths to generate");
  gen->add_option("--count", gen_count, "circuits per width");
  gen->add_option("--seed", gen_seed, "experiment seed");
  gen->add_option("--out", gen_out, "output directory");

  // run
  auto* run = app.add_subcommand("run", "Execute an experiment config");
  std::string run_config;
  std::uint64_t run_seed = 0;
  bool run_seed_set = false;
  std::string run_out;
  int run_jobs = 0;
  run->add_option("config", run_config, "JSON config file")->required();
  run->add_option("--seed", run_seed, "override config seed")
      ->each([&](const std::string&) { run_seed_set = true; });
  run->add_option("--out", run_out, "override output JSONL path");
  run->add_option("--jobs", run_jobs, "worker count");

  // summarize
  auto* summ = app.add_subcommand("summarize", "Box statistics per group");
  std::string summ_rows, summ_out;
  summ->add_option("rows", summ_rows, "JSONL rows file")->required();
  summ->add_option("--out", summ_out, "CSV output path (stdout by default)");

  // plot
  auto* plot = app.add_subcommand("plot", "Emit plot data (CSV, optional SVG)");
  std::string plot_rows, plot_kind = "box", plot_out = "plot";
  bool plot_svg = false;
  plot->add_option("rows", plot_rows, "JSONL rows file")->required();
  plot->add_option("--kind", plot_kind, "box | scatter");
  plot->add_option("--out", plot_out, "output path prefix");
  plot->add_flag("--svg", plot_svg, "also render SVG");

  // fit
  auto* fit = app.add_subcommand("fit",
                                 "Exponential-distribution layer study");
  std::string fit_class = "square";
  std::vector<int> fit_widths{4};
  int fit_lo = 1, fit_hi = 8, fit_circuits = 100;
  std::uint64_t fit_seed = 0;
  std::string fit_out = "fit";
  bool fit_svg = false;
  fit->add_option("--class", fit_class, "square | deep");
  fit->add_option("--qubits", fit_widths, "widths to study");
  fit->add_option("--layers-min", fit_lo, "first layer count");
  fit->add_option("--layers-max", fit_hi, "last layer count");
  fit->add_option("--circuits", fit_circuits, "circuits per point");
  fit->add_option("--seed", fit_seed, "seed");
  fit->add_option("--out", fit_out, "output path prefix");
  fit->add_flag("--svg", fit_svg, "also render SVG");

  // devices
  auto* dev = app.add_subcommand("devices", "List or validate device files");
  std::string dev_validate;
  dev->add_option("--validate", dev_validate,
                  "device file or bundled name to inspect");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_generate(gen_class, gen_widths, gen_count, gen_seed, gen_out);
    if (run->parsed())
      return cmd_run(run_config,
                     run_seed_set ? std::optional<std::uint64_t>(run_seed)
                                  : std::nullopt,
                     run_out, run_jobs);
    if (summ->parsed()) return cmd_summarize(summ_rows, summ_out);
    if (plot->parsed())
      return cmd_plot(plot_rows, plot_kind, plot_out, plot_svg);
    if (fit->parsed())
      return cmd_fit(fit_class, fit_widths, fit_lo, fit_hi, fit_circuits,
                     fit_seed, fit_out, fit_svg);
    if (dev->parsed()) return cmd_devices(dev_validate);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
