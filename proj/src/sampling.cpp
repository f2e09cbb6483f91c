#include "qbench/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "qbench/errors.hpp"

namespace qbench {

NoiseModel NoiseModel::uniform(int n_qubits, double eps1, double eps2,
                               double eps_readout) {
  NoiseModel m;
  m.single_qubit.assign(static_cast<std::size_t>(n_qubits), eps1);
  m.readout.assign(static_cast<std::size_t>(n_qubits), eps_readout);
  for (int a = 0; a < n_qubits; ++a)
    for (int b = 0; b < n_qubits; ++b)
      if (a != b) m.two_qubit[{a, b}] = eps2;
  return m;
}

double NoiseModel::two_qubit_rate(int a, int b) const {
  auto it = two_qubit.find({a, b});
  if (it != two_qubit.end()) return it->second;
  it = two_qubit.find({b, a});
  if (it != two_qubit.end()) return it->second;
  return 0.0;
}

bool NoiseModel::is_zero() const {
  auto nz = [](double x) { return x != 0.0; };
  if (std::any_of(single_qubit.begin(), single_qubit.end(), nz)) return false;
  if (std::any_of(readout.begin(), readout.end(), nz)) return false;
  for (const auto& [edge, rate] : two_qubit)
    if (rate != 0.0) return false;
  return true;
}

void NoiseModel::validate(int n_qubits) const {
  if (static_cast<int>(single_qubit.size()) < n_qubits ||
      static_cast<int>(readout.size()) < n_qubits)
    throw MismatchError("noise model narrower than circuit");
  auto in_range = [](double x) { return x >= 0.0 && x < 1.0; };
  for (double x : single_qubit)
    if (!in_range(x)) throw InputError("single-qubit error rate outside [0,1)");
  for (double x : readout)
    if (!in_range(x)) throw InputError("readout error rate outside [0,1)");
  for (const auto& [edge, rate] : two_qubit)
    if (!in_range(rate)) throw InputError("two-qubit error rate outside [0,1)");
}

namespace {

std::vector<double> cumulative(const ProbabilityTable& table) {
  std::vector<double> cum(table.probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < table.probs.size(); ++i) {
    acc += table.probs[i];
    cum[i] = acc;
  }
  cum.back() = 1.0;  // clamp accumulated rounding
  return cum;
}

std::uint64_t draw_from_cumulative(const std::vector<double>& cum, Rng& rng) {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  return static_cast<std::uint64_t>(std::distance(cum.begin(), it));
}

bool is_native(GateKind kind) {
  switch (kind) {
    case GateKind::U1:
    case GateKind::U2:
    case GateKind::U3:
    case GateKind::CX:
      return true;
    default:
      return false;
  }
}

// X, Y or Z on one qubit, as gates
Gate pauli_gate(int which, std::uint32_t q) {
  switch (which) {
    case 0: return Gate::x(q);
    case 1: return Gate::y(q);
    default: return Gate::z(q);
  }
}

}  // namespace

SampleSet sample_ideal(const ProbabilityTable& table, std::uint64_t shots,
                       Rng& rng) {
  if (shots < 1) throw InputError("sample_ideal: shots must be >= 1");
  const auto cum = cumulative(table);
  SampleSet out;
  out.n_qubits = table.n_qubits;
  for (std::uint64_t s = 0; s < shots; ++s)
    out.insert(draw_from_cumulative(cum, rng));
  return out;
}

SampleSet sample_uniform(int n_qubits, std::uint64_t shots, Rng& rng) {
  if (shots < 1) throw InputError("sample_uniform: shots must be >= 1");
  SampleSet out;
  out.n_qubits = n_qubits;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t s = 0; s < shots; ++s) out.insert(rng.uniform_int(dim));
  return out;
}

SampleSet sample_noisy(const Circuit& circuit, const NoiseModel& noise,
                       std::uint64_t shots, Rng& rng) {
  if (shots < 1) throw InputError("sample_noisy: shots must be >= 1");
  for (const Gate& g : circuit.gates())
    if (!is_native(g.kind))
      throw GateError(std::string("sample_noisy: non-native gate '") +
                      kind_name(g.kind) + "' (rebase first)");
  noise.validate(circuit.n_qubits());

  const int n = circuit.n_qubits();
  const auto& gates = circuit.gates();

  // per-gate injection rates, resolved once
  std::vector<double> rate(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    rate[i] = (g.arity() == 2)
                  ? noise.two_qubit_rate(static_cast<int>(g.qubits[0]),
                                         static_cast<int>(g.qubits[1]))
                  : noise.single_qubit[g.qubits[0]];
  }

  // ideal distribution reused for every injection-free shot
  std::vector<double> ideal_cum;
  auto ideal = [&]() -> const std::vector<double>& {
    if (ideal_cum.empty()) ideal_cum = cumulative(output_probabilities(circuit));
    return ideal_cum;
  };

  struct Injection {
    std::size_t after_gate;
    int qubit;
    int pauli;  // 0=X 1=Y 2=Z
  };

  SampleSet out;
  out.n_qubits = n;
  std::vector<Injection> plan;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    plan.clear();
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (rate[i] <= 0.0) continue;
      if (!rng.bernoulli(rate[i])) continue;
      const Gate& g = gates[i];
      if (g.arity() == 1) {
        plan.push_back({i, static_cast<int>(g.qubits[0]),
                        static_cast<int>(rng.uniform_int(3))});
      } else {
        // uniform non-identity two-qubit Pauli: 15 choices of (P,Q) != (I,I)
        const auto pick = rng.uniform_int(15) + 1;
        const int p0 = static_cast<int>(pick / 4);
        const int p1 = static_cast<int>(pick % 4);
        if (p0 > 0)
          plan.push_back({i, static_cast<int>(g.qubits[0]), p0 - 1});
        if (p1 > 0)
          plan.push_back({i, static_cast<int>(g.qubits[1]), p1 - 1});
      }
    }

    std::uint64_t bits;
    if (plan.empty()) {
      bits = draw_from_cumulative(ideal(), rng);
    } else {
      StateVector state(n);
      std::size_t next = 0;
      for (std::size_t i = 0; i < gates.size(); ++i) {
        state.apply(gates[i]);
        while (next < plan.size() && plan[next].after_gate == i) {
          state.apply(pauli_gate(plan[next].pauli,
                                 static_cast<std::uint32_t>(plan[next].qubit)));
          ++next;
        }
      }
      std::vector<double> cum(state.dim());
      double acc = 0.0;
      for (std::size_t i = 0; i < state.dim(); ++i) {
        acc += std::norm(state[i]);
        cum[i] = acc;
      }
      cum.back() = 1.0;
      bits = draw_from_cumulative(cum, rng);
    }

    for (int q = 0; q < n; ++q) {
      const double ea = noise.readout[static_cast<std::size_t>(q)];
      if (ea <= 0.0) continue;
      if (rng.bernoulli(ea)) bits ^= std::uint64_t{1} << (n - 1 - q);
    }
    out.insert(bits);
  }
  return out;
}

}  // namespace qbench
