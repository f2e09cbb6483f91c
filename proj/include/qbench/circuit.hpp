#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qbench {

enum class GateKind {
  H,
  X,
  Y,
  Z,
  RX,    // params[0] = angle (radians)
  RZ,    // params[0] = angle
  U1,    // params[0] = lambda
  U2,    // params[0] = phi, params[1] = lambda
  U3,    // params[0] = theta, params[1] = phi, params[2] = lambda
  CX,    // qubits[0] = control, qubits[1] = target
  CZ,
  SWAP,
  SU4,   // arbitrary two-qubit unitary, row-major 4x4
};

bool is_two_qubit(GateKind kind);
const char* kind_name(GateKind kind);

using Su4Matrix = std::array<std::complex<double>, 16>;

/// One gate application.  Angles are stored in radians and never
/// normalised: RZ(a) and RZ(a + 2*pi) are distinct syntax with identical
/// semantics.  SU4 payloads are shared, never mutated.
struct Gate {
  GateKind kind{GateKind::H};
  std::array<std::uint32_t, 2> qubits{0, 0};
  std::array<double, 3> params{0.0, 0.0, 0.0};
  std::shared_ptr<const Su4Matrix> matrix;  // SU4 only

  static Gate h(std::uint32_t q) { return {GateKind::H, {q, 0}}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, {q, 0}}; }
  static Gate y(std::uint32_t q) { return {GateKind::Y, {q, 0}}; }
  static Gate z(std::uint32_t q) { return {GateKind::Z, {q, 0}}; }
  static Gate rx(std::uint32_t q, double angle) {
    return {GateKind::RX, {q, 0}, {angle}};
  }
  static Gate rz(std::uint32_t q, double angle) {
    return {GateKind::RZ, {q, 0}, {angle}};
  }
  static Gate u1(std::uint32_t q, double lambda) {
    return {GateKind::U1, {q, 0}, {lambda}};
  }
  static Gate u2(std::uint32_t q, double phi, double lambda) {
    return {GateKind::U2, {q, 0}, {phi, lambda}};
  }
  static Gate u3(std::uint32_t q, double theta, double phi, double lambda) {
    return {GateKind::U3, {q, 0}, {theta, phi, lambda}};
  }
  static Gate cx(std::uint32_t control, std::uint32_t target) {
    return {GateKind::CX, {control, target}};
  }
  static Gate cz(std::uint32_t a, std::uint32_t b) {
    return {GateKind::CZ, {a, b}};
  }
  static Gate swap(std::uint32_t a, std::uint32_t b) {
    return {GateKind::SWAP, {a, b}};
  }
  /// Checks unitarity of the payload (U^dag U = I entrywise within 1e-10).
  static Gate su4(std::uint32_t a, std::uint32_t b, const Su4Matrix& m);

  int arity() const { return is_two_qubit(kind) ? 2 : 1; }
};

/// Ordered gate list over n qubits with an optional terminal
/// computational-basis measurement of all qubits.  Immutable once built;
/// share freely across threads.
///
/// Bit convention used throughout: bitstring character i (leftmost = 0)
/// reports qubit i, and basis-state indices place qubit 0 at the most
/// significant bit.
class Circuit {
 public:
  explicit Circuit(int n_qubits, bool measure_all = true);

  int n_qubits() const { return n_qubits_; }
  bool measure_all() const { return measure_all_; }
  void set_measure_all(bool m) { measure_all_ = m; }

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Validates qubit indices before appending.
  void add(Gate gate);
  void add(const std::vector<Gate>& gates);

  /// Exact inverse circuit: gates reversed and individually inverted.
  Circuit inverse() const;

 private:
  int n_qubits_;
  bool measure_all_;
  std::vector<Gate> gates_;
};

/// Number of ASAP layers: a gate joins the earliest layer in which none of
/// its qubits is busy.  Empty circuit has depth 0.
int circuit_depth(const Circuit& circuit);

/// Total gate count, or count of gates matching `kind`.
std::size_t gate_count(const Circuit& circuit,
                       std::optional<GateKind> kind = std::nullopt);

/// Index <-> bitstring helpers for the fixed bit convention above.
std::string index_to_bitstring(std::uint64_t index, int n_qubits);
std::uint64_t bitstring_to_index(const std::string& bits);

}  // namespace qbench
