#include "qbench/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "qbench/errors.hpp"

namespace qbench {

bool is_two_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::SWAP:
    case GateKind::SU4:
      return true;
    default:
      return false;
  }
}

const char* kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
    case GateKind::U3: return "u3";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::SU4: return "su4";
  }
  return "?";
}

Gate Gate::su4(std::uint32_t a, std::uint32_t b, const Su4Matrix& m) {
  // U^dag U = I entrywise within 1e-10
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += std::conj(m[k * 4 + i]) * m[k * 4 + j];
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(acc - expect) > 1e-10)
        throw GateError("su4: matrix is not unitary within 1e-10");
    }
  }
  for (const auto& e : m) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      throw GateError("su4: non-finite matrix entry");
  }
  Gate g{GateKind::SU4, {a, b}};
  g.matrix = std::make_shared<const Su4Matrix>(m);
  return g;
}

Circuit::Circuit(int n_qubits, bool measure_all)
    : n_qubits_(n_qubits), measure_all_(measure_all) {
  if (n_qubits < 1) throw WidthError("circuit must have at least one qubit");
}

void Circuit::add(Gate gate) {
  const auto n = static_cast<std::uint32_t>(n_qubits_);
  if (gate.qubits[0] >= n)
    throw WidthError("gate qubit index out of range");
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(gate.params[i]))
      throw GateError("gate angle must be finite");
  }
  if (gate.arity() == 2) {
    if (gate.qubits[1] >= n)
      throw WidthError("gate qubit index out of range");
    if (gate.qubits[0] == gate.qubits[1])
      throw GateError("two-qubit gate needs distinct qubits");
  }
  if (gate.kind == GateKind::SU4 && !gate.matrix)
    throw GateError("su4 gate without matrix payload");
  gates_.push_back(std::move(gate));
}

void Circuit::add(const std::vector<Gate>& gates) {
  for (const auto& g : gates) add(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits_, measure_all_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    const Gate& g = *it;
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
      case GateKind::CX:
      case GateKind::CZ:
      case GateKind::SWAP:
        inv.add(g);
        break;
      case GateKind::RX:
        inv.add(Gate::rx(g.qubits[0], -g.params[0]));
        break;
      case GateKind::RZ:
        inv.add(Gate::rz(g.qubits[0], -g.params[0]));
        break;
      case GateKind::U1:
        inv.add(Gate::u1(g.qubits[0], -g.params[0]));
        break;
      case GateKind::U2:
        // U2(phi,lam)^-1 = U3(-pi/2, -lam, -phi)
        inv.add(Gate::u3(g.qubits[0], -1.5707963267948966, -g.params[1],
                         -g.params[0]));
        break;
      case GateKind::U3:
        inv.add(Gate::u3(g.qubits[0], -g.params[0], -g.params[2],
                         -g.params[1]));
        break;
      case GateKind::SU4: {
        Su4Matrix dag;
        const Su4Matrix& m = *g.matrix;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) dag[i * 4 + j] = std::conj(m[j * 4 + i]);
        inv.add(Gate::su4(g.qubits[0], g.qubits[1], dag));
        break;
      }
    }
  }
  return inv;
}

int circuit_depth(const Circuit& circuit) {
  std::vector<int> busy_until(circuit.n_qubits(), 0);
  int depth = 0;
  for (const Gate& g : circuit.gates()) {
    int layer = busy_until[g.qubits[0]];
    if (g.arity() == 2) layer = std::max(layer, busy_until[g.qubits[1]]);
    busy_until[g.qubits[0]] = layer + 1;
    if (g.arity() == 2) busy_until[g.qubits[1]] = layer + 1;
    depth = std::max(depth, layer + 1);
  }
  return depth;
}

std::size_t gate_count(const Circuit& circuit, std::optional<GateKind> kind) {
  if (!kind) return circuit.size();
  return static_cast<std::size_t>(
      std::count_if(circuit.gates().begin(), circuit.gates().end(),
                    [&](const Gate& g) { return g.kind == *kind; }));
}

std::string index_to_bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int i = 0; i < n_qubits; ++i) {
    if (index >> (n_qubits - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::uint64_t bitstring_to_index(const std::string& bits) {
  std::uint64_t x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InputError("bitstring must be over {0,1}");
    x = (x << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return x;
}

}  // namespace qbench
