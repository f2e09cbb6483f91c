#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qbench/analysis.hpp"
#include "qbench/compile.hpp"
#include "qbench/errors.hpp"
#include "qbench/generators.hpp"
#include "qbench/harness.hpp"
#include "qbench/kak.hpp"
#include "qbench/metrics.hpp"
#include "qbench/qasm.hpp"
#include "qbench/rebase.hpp"
#include "qbench/sampling.hpp"
#include "qbench/statevector.hpp"
#include "qbench/unitary.hpp"

namespace py = pybind11;
using namespace qbench;

namespace {

std::vector<std::complex<double>> unitary_entries(const Circuit& c) {
  const MatrixXcd u = circuit_unitary(c);
  std::vector<std::complex<double>> flat;
  flat.reserve(static_cast<std::size_t>(u.size()));
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index col = 0; col < u.cols(); ++col)
      flat.push_back(u(r, col));
  return flat;
}

Matrix4cd matrix_from_rows(
    const std::vector<std::vector<std::complex<double>>>& rows) {
  if (rows.size() != 4) throw InputError("expected a 4x4 matrix");
  Matrix4cd u;
  for (int r = 0; r < 4; ++r) {
    if (rows[static_cast<std::size_t>(r)].size() != 4)
      throw InputError("expected a 4x4 matrix");
    for (int c = 0; c < 4; ++c)
      u(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return u;
}

}  // namespace

PYBIND11_MODULE(_qbench, m) {
  m.doc() = "Quantum benchmarking suite: generators, compiler, simulator "
            "and figures of merit";

  py::register_exception<Error>(m, "QbenchError");

  py::enum_<GateKind>(m, "GateKind")
      .value("H", GateKind::H)
      .value("X", GateKind::X)
      .value("Y", GateKind::Y)
      .value("Z", GateKind::Z)
      .value("RX", GateKind::RX)
      .value("RZ", GateKind::RZ)
      .value("U1", GateKind::U1)
      .value("U2", GateKind::U2)
      .value("U3", GateKind::U3)
      .value("CX", GateKind::CX)
      .value("CZ", GateKind::CZ)
      .value("SWAP", GateKind::SWAP)
      .value("SU4", GateKind::SU4);

  py::class_<Gate>(m, "Gate")
      .def_readonly("kind", &Gate::kind)
      .def_property_readonly("qubits",
                             [](const Gate& g) {
                               std::vector<int> q{
                                   static_cast<int>(g.qubits[0])};
                               if (g.arity() == 2)
                                 q.push_back(static_cast<int>(g.qubits[1]));
                               return q;
                             })
      .def_property_readonly("params",
                             [](const Gate& g) {
                               return std::vector<double>{
                                   g.params[0], g.params[1], g.params[2]};
                             })
      .def("__repr__", [](const Gate& g) {
        std::ostringstream out;
        out << "<Gate " << kind_name(g.kind) << " q" << g.qubits[0];
        if (g.arity() == 2) out << ",q" << g.qubits[1];
        out << ">";
        return out.str();
      });

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<int, bool>(), py::arg("n_qubits"),
           py::arg("measure_all") = true)
      .def_property_readonly("n_qubits", &Circuit::n_qubits)
      .def_property_readonly("measure_all", &Circuit::measure_all)
      .def_property_readonly(
          "gates", [](const Circuit& c) { return c.gates(); })
      .def("__len__", &Circuit::size)
      .def("h", [](Circuit& c, int q) { c.add(Gate::h(static_cast<std::uint32_t>(q))); })
      .def("x", [](Circuit& c, int q) { c.add(Gate::x(static_cast<std::uint32_t>(q))); })
      .def("y", [](Circuit& c, int q) { c.add(Gate::y(static_cast<std::uint32_t>(q))); })
      .def("z", [](Circuit& c, int q) { c.add(Gate::z(static_cast<std::uint32_t>(q))); })
      .def("rx", [](Circuit& c, int q, double a) { c.add(Gate::rx(static_cast<std::uint32_t>(q), a)); })
      .def("rz", [](Circuit& c, int q, double a) { c.add(Gate::rz(static_cast<std::uint32_t>(q), a)); })
      .def("u1", [](Circuit& c, int q, double l) { c.add(Gate::u1(static_cast<std::uint32_t>(q), l)); })
      .def("u2", [](Circuit& c, int q, double p, double l) { c.add(Gate::u2(static_cast<std::uint32_t>(q), p, l)); })
      .def("u3", [](Circuit& c, int q, double t, double p, double l) { c.add(Gate::u3(static_cast<std::uint32_t>(q), t, p, l)); })
      .def("cx", [](Circuit& c, int a, int b) { c.add(Gate::cx(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))); })
      .def("cz", [](Circuit& c, int a, int b) { c.add(Gate::cz(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))); })
      .def("swap", [](Circuit& c, int a, int b) { c.add(Gate::swap(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))); })
      .def("depth", [](const Circuit& c) { return circuit_depth(c); })
      .def("gate_count",
           [](const Circuit& c, std::optional<GateKind> kind) {
             return gate_count(c, kind);
           },
           py::arg("kind") = py::none())
      .def("inverse", &Circuit::inverse)
      .def("unitary", &unitary_entries,
           "Dense unitary as a row-major flat list (n <= 12)");

  // generators
  m.def("gen_shallow",
        [](int n, std::uint64_t seed, std::optional<double> fixed_angle) {
          Rng rng(seed);
          return gen_shallow(n, rng, fixed_angle);
        },
        py::arg("n"), py::arg("seed"), py::arg("fixed_angle") = py::none());
  m.def("gen_square",
        [](int n, std::uint64_t seed, std::optional<int> layers) {
          Rng rng(seed);
          return gen_square(n, rng, layers);
        },
        py::arg("n"), py::arg("seed"), py::arg("layers") = py::none());
  m.def("gen_deep",
        [](int n, std::uint64_t seed, std::optional<int> layers) {
          Rng rng(seed);
          return gen_deep(n, rng, layers);
        },
        py::arg("n"), py::arg("seed"), py::arg("layers") = py::none());
  m.def("haar_su4", [](std::uint64_t seed) {
    Rng rng(seed);
    const Su4Matrix u = haar_su4(rng);
    std::vector<std::complex<double>> flat(u.begin(), u.end());
    return flat;
  });
  m.def("pauli_gadget", [](double alpha, const std::string& s) {
    return pauli_gadget(alpha, PauliString::parse(s));
  });

  // simulation
  m.def("output_probabilities", [](const Circuit& c) {
    return output_probabilities(c).probs;
  });
  m.def("sample_ideal",
        [](const Circuit& c, std::uint64_t shots, std::uint64_t seed) {
          Rng rng(seed);
          const auto samples =
              sample_ideal(output_probabilities(c), shots, rng);
          return samples.counts;
        },
        py::arg("circuit"), py::arg("shots"), py::arg("seed"));
  m.def("sample_noisy",
        [](const Circuit& c, double eps1, double eps2, double eps_readout,
           std::uint64_t shots, std::uint64_t seed) {
          Rng rng(seed);
          const auto samples = sample_noisy(
              c, NoiseModel::uniform(c.n_qubits(), eps1, eps2, eps_readout),
              shots, rng);
          return samples.counts;
        },
        py::arg("circuit"), py::arg("eps1"), py::arg("eps2"),
        py::arg("eps_readout"), py::arg("shots"), py::arg("seed"));

  // metrics (tables as plain probability lists, samples as dicts)
  auto to_table = [](const std::vector<double>& probs) {
    ProbabilityTable t;
    std::size_t dim = probs.size();
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim)
      throw InputError("table length must be a power of two");
    t.n_qubits = n;
    t.probs = probs;
    return t;
  };
  auto to_samples = [](const std::map<std::uint64_t, std::uint64_t>& counts,
                       int n_qubits) {
    SampleSet s;
    s.n_qubits = n_qubits;
    for (const auto& [bits, count] : counts) s.insert(bits, count);
    return s;
  };
  m.def("ideal_hog", [to_table](const std::vector<double>& probs) {
    return ideal_hog(to_table(probs));
  });
  m.def("heavy_median", [to_table](const std::vector<double>& probs) {
    return heavy_set(to_table(probs)).median_value;
  });
  m.def("hog_probability",
        [to_table, to_samples](const std::map<std::uint64_t, std::uint64_t>& counts,
                               const std::vector<double>& probs) {
          const auto t = to_table(probs);
          return hog_probability(to_samples(counts, t.n_qubits), t);
        });
  m.def("cross_entropy",
        [to_table, to_samples](const std::map<std::uint64_t, std::uint64_t>& counts,
                               const std::vector<double>& probs) {
          const auto t = to_table(probs);
          return cross_entropy(to_samples(counts, t.n_qubits), t);
        });
  m.def("ced",
        [to_table, to_samples](const std::map<std::uint64_t, std::uint64_t>& counts,
                               const std::vector<double>& probs) {
          const auto t = to_table(probs);
          return ced(to_samples(counts, t.n_qubits), t);
        });
  m.def("l1_distance",
        [to_table, to_samples](const std::map<std::uint64_t, std::uint64_t>& counts,
                               const std::vector<double>& probs) {
          const auto t = to_table(probs);
          return l1_distance(to_samples(counts, t.n_qubits), t);
        });
  m.def("l1_between",
        [to_table](const std::vector<double>& a, const std::vector<double>& b) {
          return l1_between(to_table(a), to_table(b));
        });
  m.def("normalized_hog", &normalized_hog);

  // devices and compilation
  py::class_<GraphProperties>(m, "GraphProperties")
      .def_readonly("vertices", &GraphProperties::vertices)
      .def_readonly("average_degree", &GraphProperties::average_degree)
      .def_readonly("radius", &GraphProperties::radius)
      .def_readonly("min_cycle_length", &GraphProperties::min_cycle_length);
  py::class_<DeviceModel>(m, "DeviceModel")
      .def_readonly("name", &DeviceModel::name)
      .def_property_readonly("n_qubits", [](const DeviceModel& d) {
        return d.coupling.n_qubits;
      });
  m.def("load_device", &load_device);
  m.def("resolve_device", &resolve_device);
  m.def("bundled_device_names", &bundled_device_names);
  m.def("graph_properties", [](const DeviceModel& dev) {
    return graph_properties(dev.coupling);
  });
  m.def("readout_error", &readout_error);
  m.def("rb_error_per_clifford", &rb_error_per_clifford);
  m.def("pauli_error", &pauli_error);

  py::class_<CompileResult>(m, "CompileResult")
      .def_readonly("circuit", &CompileResult::circuit)
      .def_readonly("swap_count", &CompileResult::swap_count)
      .def_property_readonly("placement",
                             [](const CompileResult& r) {
                               return r.placement.virtual_to_physical;
                             })
      .def_property_readonly("final_map", [](const CompileResult& r) {
        return r.final_map.virtual_to_physical;
      });
  m.def("compile",
        [](const Circuit& c, const DeviceModel& dev,
           const std::string& strategy) {
          return compile(c, dev, strategy_from_name(strategy));
        },
        py::arg("circuit"), py::arg("device"),
        py::arg("strategy") = "line_unaware");
  m.def("compiled_deviation", &compiled_deviation);
  m.def("rebase", &rebase);
  m.def("fuse_single_qubit_gates", &fuse_single_qubit_gates);
  m.def("kak_decompose",
        [](const std::vector<std::vector<std::complex<double>>>& rows) {
          return kak_decompose(matrix_from_rows(rows));
        });

  // analysis
  m.def("exponential_l1_fit",
        [to_table](const std::vector<std::vector<double>>& tables, int n,
                   int bins) {
          std::vector<ProbabilityTable> ts;
          ts.reserve(tables.size());
          for (const auto& probs : tables) ts.push_back(to_table(probs));
          return exponential_l1_fit(ts, n, bins);
        },
        py::arg("tables"), py::arg("n"), py::arg("bins") = 50);
  py::class_<BoxStats>(m, "BoxStats")
      .def_readonly("q1", &BoxStats::q1)
      .def_readonly("median", &BoxStats::median)
      .def_readonly("q3", &BoxStats::q3)
      .def_readonly("whisker_lo", &BoxStats::whisker_lo)
      .def_readonly("whisker_hi", &BoxStats::whisker_hi)
      .def_readonly("mean", &BoxStats::mean)
      .def_readonly("count", &BoxStats::count);
  m.def("box_stats", &box_stats);
  m.def("largest_passing_width", &largest_passing_width,
        py::arg("mean_hog_by_n"), py::arg("threshold") = 2.0 / 3.0);
  m.def("correlation_regression",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
          const Regression r = correlation_regression(xs, ys);
          return py::make_tuple(r.pearson_r, r.slope, r.intercept);
        });

  // qasm
  m.def("export_qasm", &export_qasm);
  m.def("parse_qasm", &parse_qasm);

  // harness
  m.def("run_experiment_json",
        [](const std::string& config_json) {
          const auto rows = run_experiment(
              ExperimentConfig::from_json_text(config_json));
          std::vector<std::string> out;
          out.reserve(rows.size());
          for (const auto& row : rows) out.push_back(row.to_json());
          return out;
        },
        "Run an experiment from a JSON config string; returns JSON rows");
}
